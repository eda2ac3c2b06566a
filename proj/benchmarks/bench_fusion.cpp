#include <benchmark/benchmark.h>

#include "jfusion/enumerate.hpp"
#include "jfusion/explicit_scheme.hpp"
#include "jfusion/schemes.hpp"
#include "jfusion/wl.hpp"

using namespace jfusion;

static void BM_StructureTable(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(StructureTable(k, d));
}
BENCHMARK(BM_StructureTable)->Args({1, 3})->Args({2, 2})->Args({3, 2})->Args({1, 4});

static void BM_IsValidFusion(benchmark::State& state) {
    const StructureTable table(1, 4);
    const auto s = cameron_partition(1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(is_valid_fusion(table, s));
}
BENCHMARK(BM_IsValidFusion);

static void BM_Enumerate(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    EnumerationOptions options;
    options.prune = state.range(2) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_fusions(k, d, options));
}
BENCHMARK(BM_Enumerate)->Args({2, 2, 1})->Args({2, 2, 0})->Args({1, 3, 1})->Args({3, 2, 1})->Unit(benchmark::kMillisecond);

static void BM_WLClosure(benchmark::State& state) {
    const auto raw = build_explicit(1, 3, static_cast<long>(state.range(0)));
    const auto coloring = cameron_graph_coloring(raw);
    for (auto _ : state) benchmark::DoNotOptimize(wl_closure(coloring));
}
BENCHMARK(BM_WLClosure)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
