#include <benchmark/benchmark.h>

#include "wgm/asymptotics.hpp"
#include "wgm/fdpml.hpp"

using namespace wgm;

static void BM_SolveNear(benchmark::State& state) {
  const auto prof = IndexProfile::ilchenko(1.5, 2.0, 1.0);
  const auto evp = assemble(prof, 1, 30, make_grid(1.0, static_cast<int>(state.range(0))));
  const cplx shift(21.2 * 21.2, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_near(evp, shift));
}
BENCHMARK(BM_SolveNear)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

static void BM_RefineExtrapolated(benchmark::State& state) {
  const auto prof = IndexProfile::ilchenko(1.5, 2.0, 1.0);
  const auto e = expansion_for(classify(prof), 1, 0);
  const double seed = evaluate_expansion(e, 30, e.series.order());
  for (auto _ : state) benchmark::DoNotOptimize(refine_extrapolated(prof, 1, 30, {seed, 0.0}));
}
BENCHMARK(BM_RefineExtrapolated)->Unit(benchmark::kMillisecond);
