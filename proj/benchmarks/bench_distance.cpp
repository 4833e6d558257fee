#include "ldpcdist/distance.hpp"
#include "ldpcdist/ensembles.hpp"

#include <benchmark/benchmark.h>

using namespace ldpcdist;

static void BM_distance_sw(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    Code code(sample_a(EnsembleSpec{3, 6, n}, 11));
    for (auto _ : state) benchmark::DoNotOptimize(distance_sw(code, {0.45, 0, 1 << 20, true}));
}
BENCHMARK(BM_distance_sw)->Arg(20)->Arg(28)->Arg(36);

static void BM_distance_mb(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    Code code(sample_a(EnsembleSpec{3, 6, n}, 11));
    for (auto _ : state) benchmark::DoNotOptimize(distance_mb(code, {0, 1 << 22, true}));
}
BENCHMARK(BM_distance_mb)->Arg(20)->Arg(28)->Arg(36);

static void BM_distance_cs(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    Code code(sample_a(EnsembleSpec{3, 6, n}, 11));
    CsOptions opts{0.45, 0, 20, 7, unsigned(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(distance_cs(code, opts));
}
BENCHMARK(BM_distance_cs)->Args({24, 1})->Args({24, 4})->Args({32, 1})->Args({32, 4});

BENCHMARK_MAIN();
