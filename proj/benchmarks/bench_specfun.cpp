#include <benchmark/benchmark.h>

#include "wgm/specfun.hpp"

using namespace wgm;

static void BM_BesselJ(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const cplx z(1.5 * m, -1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(m, z));
}
BENCHMARK(BM_BesselJ)->Arg(5)->Arg(30)->Arg(60);

static void BM_Hankel1(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const cplx z(0.75 * m, -1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(hankel1(m, z));
}
BENCHMARK(BM_Hankel1)->Arg(5)->Arg(30)->Arg(60);

static void BM_Airy(benchmark::State& state) {
  double z = -6.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(airy_mirror(z));
    z = z > 10.0 ? -6.0 : z + 0.37;
  }
}
BENCHMARK(BM_Airy);

static void BM_GaussHermiteAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite_all(static_cast<int>(state.range(0)), 1.3));
}
BENCHMARK(BM_GaussHermiteAll)->Arg(32)->Arg(128);
