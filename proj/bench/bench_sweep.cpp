// Serial reference vs OpenMP sweep over a log temperature grid.
#include <benchmark/benchmark.h>

#include "gravcat/analysis.hpp"

namespace {

gravcat::SweepSpec make_spec(int n) {
  return {gravcat::ModelParams(1.0, 0.2), 1e-3, 1e3, n, gravcat::Spacing::Log};
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = make_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gravcat::sweep_serial(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = make_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gravcat::sweep(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Threshold(benchmark::State& state) {
  const gravcat::ModelParams params(0.015, 17.0072, gravcat::UnitMode::Physical);
  for (auto _ : state) benchmark::DoNotOptimize(gravcat::threshold_temperature(params, 1e-10));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->RangeMultiplier(8)->Range(400, 1 << 18)->UseRealTime();
BENCHMARK(BM_SweepParallel)->RangeMultiplier(8)->Range(400, 1 << 18)->UseRealTime();
BENCHMARK(BM_Threshold);

BENCHMARK_MAIN();
