#include <benchmark/benchmark.h>

#include "treepat/pattern.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

static void BM_TreeIndex(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto& ts = all_trees(n);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_index(ts[i++ % ts.size()]).index);
    }
}
BENCHMARK(BM_TreeIndex)->Arg(10)->Arg(12);

static void BM_CountCopies(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto& ts = all_trees(n);
    TreePattern p = pattern_of(index_to_tree(4, 2));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_copies(ts[i++ % ts.size()], p));
    }
}
BENCHMARK(BM_CountCopies)->Arg(10)->Arg(12);

static void BM_BetaRoundTrip(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto& ts = all_trees(n);
    std::size_t i = 0;
    for (auto _ : state) {
        const BinaryTree& t = ts[i++ % ts.size()];
        benchmark::DoNotOptimize(beta_inverse(beta(t)).word().size());
    }
}
BENCHMARK(BM_BetaRoundTrip)->Arg(10)->Arg(12);

static void BM_DyckWord(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto& ts = all_trees(n);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dyck_word(beta(ts[i++ % ts.size()])).size());
    }
}
BENCHMARK(BM_DyckWord)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
