#include <benchmark/benchmark.h>

#include "wgm/asymptotics.hpp"

using namespace wgm;

static void BM_CaseARecurrence(benchmark::State& state) {
  Poly nt = {1.5, 0.3, -0.2, 0.1, 0.05, 0.01};
  nt.resize(kMaxRecurrenceOrder + 1, 0.0);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(case_a_recurrence(nt, 1, 0, order));
}
BENCHMARK(BM_CaseARecurrence)->Arg(4)->Arg(8)->Arg(12);

static void BM_CaseCRecurrence(benchmark::State& state) {
  const Poly nt = {1.5, -1.5, -0.75, 0.25, 0.5, 0.1, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(case_c_recurrence(nt, 1, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CaseCRecurrence)->Arg(3)->Arg(6);

static void BM_ExpansionFor(benchmark::State& state) {
  const auto wc = classify(IndexProfile::constant(1.5, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(expansion_for(wc, 1, 0, 10));
}
BENCHMARK(BM_ExpansionFor);
