#include <benchmark/benchmark.h>

#include "wgm/modal.hpp"

using namespace wgm;

static void BM_ModalFunction(benchmark::State& state) {
  const cplx k(30.1, -1.8e-5);
  for (auto _ : state) benchmark::DoNotOptimize(modal_function(1, 1.5, 1.0, 40, k));
}
BENCHMARK(BM_ModalFunction);

static void BM_CountZeros(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto box = wgm_search_box(1, 1.5, 1.0, m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_zeros(1, 1.5, 1.0, m, box));
}
BENCHMARK(BM_CountZeros)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_FindResonances(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto box = wgm_search_box(1, 1.5, 1.0, m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_resonances(1, 1.5, 1.0, m, box));
}
BENCHMARK(BM_FindResonances)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
