// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cyclord/cyclord.hpp"

using namespace cyclord;

namespace {

void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census_serial(n).summary_json);
}
BENCHMARK(BM_CensusSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_census({.n = n, .threads = threads}).summary_json);
}
BENCHMARK(BM_CensusParallel)->Args({4, 1})->Args({4, 4})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_HypertournamentsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_transitive_hypertournaments_serial(n));
}
BENCHMARK(BM_HypertournamentsSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HypertournamentsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_transitive_hypertournaments_parallel(n, threads));
}
BENCHMARK(BM_HypertournamentsParallel)->Args({5, 4})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

// Empty input on n vertices: every ordering induces it, so the scan is full length.
void BM_OrderingScanSerial(benchmark::State& state) {
  const OrientedThreeHypergraph t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scan_orderings_serial(t, true));
}
BENCHMARK(BM_OrderingScanSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_OrderingScanParallel(benchmark::State& state) {
  const OrientedThreeHypergraph t(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan_orderings_parallel(t, true, threads));
}
BENCHMARK(BM_OrderingScanParallel)->Args({8, 4})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
