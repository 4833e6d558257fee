#include "ldpcdist/ensembles.hpp"
#include "ldpcdist/gf2.hpp"

#include <benchmark/benchmark.h>

using namespace ldpcdist;

static void BM_rank(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    BitMatrix h = sample_a(EnsembleSpec{3, 6, n}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(h));
    state.SetComplexityN(int64_t(n));
}
BENCHMARK(BM_rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_nullspace(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    BitMatrix h = sample_a(EnsembleSpec{3, 6, n}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace_basis(h));
}
BENCHMARK(BM_nullspace)->RangeMultiplier(2)->Range(64, 1024);

static void BM_solve_affine(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    BitMatrix h = sample_a(EnsembleSpec{3, 6, n}, 3);
    BitVector x(n);
    for (std::size_t i = 0; i < n; i += 3) x.set(i);
    BitVector y = h.mul(x);
    for (auto _ : state) benchmark::DoNotOptimize(solve_affine(h, y));
}
BENCHMARK(BM_solve_affine)->RangeMultiplier(2)->Range(64, 1024);
