#include "fockcb/canonical.hpp"
#include "fockcb/crystal.hpp"

#include <benchmark/benchmark.h>

using namespace fockcb;

static void BM_MatrixSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(decomposition_matrix_serial(4, 2, {0, 1}, static_cast<int>(st.range(0))));
}
static void BM_MatrixParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(decomposition_matrix(4, 2, {0, 1}, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_MatrixSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CrystalSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(crystal_graph_serial(4, 3, {0, 1, 2}, static_cast<int>(st.range(0))));
}
static void BM_CrystalParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(crystal_graph(4, 3, {0, 1, 2}, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CrystalSerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrystalParallel)->Arg(6)->Unit(benchmark::kMillisecond);

// Fresh engine per iteration so the bar cache starts cold.
static void BM_BarSerial(benchmark::State& st) {
    auto us = enumerate_degree_component(0, static_cast<int>(st.range(0)));
    for (auto _ : st) {
        WedgeEngine eng(4, 2);
        benchmark::DoNotOptimize(bar_all_serial(eng, us));
    }
}
static void BM_BarParallel(benchmark::State& st) {
    auto us = enumerate_degree_component(0, static_cast<int>(st.range(0)));
    for (auto _ : st) {
        WedgeEngine eng(4, 2);
        benchmark::DoNotOptimize(bar_all(eng, us));
    }
}
BENCHMARK(BM_BarSerial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BarParallel)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
