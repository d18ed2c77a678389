#include <benchmark/benchmark.h>

#include "treepat/rewrite.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

static void BM_TopDownReplace(benchmark::State& state) {
    const int n = int(state.range(0));
    const auto& ts = all_trees(n);
    auto rules = two_rule_set(index_to_tree(4, 2), index_to_tree(4, 3),
                              parse_perm("3124"));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            top_down_replace(ts[i++ % ts.size()], rules).leaf_count());
    }
}
BENCHMARK(BM_TopDownReplace)->Arg(10)->Arg(12);

static void BM_VerifyTwoRule(benchmark::State& state) {
    BinaryTree s = index_to_tree(4, 2), t = index_to_tree(4, 3);
    auto perm = parse_perm("3124");
    const int max_leaves = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_two_rule(s, t, perm, max_leaves).pass);
    }
}
BENCHMARK(BM_VerifyTwoRule)->Arg(8)->Arg(10);

static void BM_SearchPerms(benchmark::State& state) {
    BinaryTree s = index_to_tree(4, 2), t = index_to_tree(4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            search_permutations(s, t, 8, SearchMode::TwoRule).size());
    }
}
BENCHMARK(BM_SearchPerms);
