// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "orthobound/campaign.hpp"

using namespace orthobound;

namespace {

FuzzConfig fuzz_config(std::int64_t count) {
  FuzzConfig c;
  c.count = static_cast<std::size_t>(count);
  c.mode = Field::Complex;
  c.dim = 6;
  c.family_size = 3;
  return c;
}

void BM_FuzzSerial(benchmark::State& state) {
  const FuzzConfig c = fuzz_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_fuzz_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FuzzParallel(benchmark::State& state) {
  const FuzzConfig c = fuzz_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_fuzz_parallel(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_EquivalenceSerial(benchmark::State& state) {
  EquivalenceConfig c;
  c.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_equivalence_serial(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EquivalenceParallel(benchmark::State& state) {
  EquivalenceConfig c;
  c.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_equivalence_parallel(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_FuzzSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivalenceSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivalenceParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
