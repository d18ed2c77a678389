#include <benchmark/benchmark.h>

#include "treepat/genfun.hpp"
#include "treepat/tree.hpp"

using namespace treepat;

static void BM_AvoidSeries(benchmark::State& state) {
    BinaryTree t = index_to_tree(5, 2);
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(avoid_series(t, order).terms().size());
    }
}
BENCHMARK(BM_AvoidSeries)->Arg(31)->Arg(63);

static void BM_EnumerateSeries(benchmark::State& state) {
    BinaryTree t = index_to_tree(5, 2);
    const int order = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_series(t, order).terms().size());
    }
}
BENCHMARK(BM_EnumerateSeries)->Arg(25)->Arg(31);

static void BM_AvoidEquation(benchmark::State& state) {
    BinaryTree t = index_to_tree(5, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(avoid_equation(t).terms().size());
    }
}
BENCHMARK(BM_AvoidEquation);

static void BM_EnumerateEquation(benchmark::State& state) {
    BinaryTree t = index_to_tree(4, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_equation(t).terms().size());
    }
}
BENCHMARK(BM_EnumerateEquation);
