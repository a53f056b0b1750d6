#include <benchmark/benchmark.h>

#include "ctr/expand.hpp"
#include "ctr/factor.hpp"

using namespace ctr;

static void BM_PolyMul(benchmark::State& state) {
    Poly<Rat> z = Poly<Rat>::var();
    Poly<Rat> f = (z * z + z.scaled(Rat(3, 7)) + Poly<Rat>(1)).pow(8);
    for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_PolyMul);

static void BM_SeriesInverse(benchmark::State& state) {
    Series<Rat> w = Series<Rat>::identity(40);
    Series<Rat> f = Series<Rat>::constant(Rat(1), 40) + w + (w * w).scaled(Rat(5, 3));
    for (auto _ : state) benchmark::DoNotOptimize(f.inverse());
}
BENCHMARK(BM_SeriesInverse);

static void BM_Factor(benchmark::State& state) {
    Poly<Rat> z = Poly<Rat>::var();
    Poly<Rat> f = (z * z + Poly<Rat>(2)) * (z * z + Poly<Rat>(5)) * (z - Poly<Rat>(Rat(1, 3)));
    for (auto _ : state) benchmark::DoNotOptimize(factor_rationals(f));
}
BENCHMARK(BM_Factor);

BENCHMARK_MAIN();
