#include <benchmark/benchmark.h>

#include "ohg/harness.hpp"
#include "ohg/partition.hpp"

using namespace ohg;

namespace {

OrientedHypergraph instance(int n) { return random_hypergraph({n, 2 * n, 2, 4, 17}); }

void BM_SubsetSpectra(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_spectra(g));
}

void BM_SubsetSpectraSerial(benchmark::State& state) {
  const auto g = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_spectra_serial(g));
}

HarnessOptions harness_options(benchmark::State& state) {
  HarnessOptions opt;
  opt.trials = static_cast<int>(state.range(0));
  opt.seed = 5;
  return opt;
}

void BM_Harness(benchmark::State& state) {
  const auto opt = harness_options(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_harness(opt));
}

void BM_HarnessSerial(benchmark::State& state) {
  const auto opt = harness_options(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_harness_serial(opt));
}

}  // namespace

BENCHMARK(BM_SubsetSpectra)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetSpectraSerial)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Harness)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HarnessSerial)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
