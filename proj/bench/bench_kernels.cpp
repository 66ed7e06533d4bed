#include <benchmark/benchmark.h>

#include "permcover/closed_forms.hpp"
#include "permcover/kernels.hpp"

using namespace permcover;

namespace {

void BM_BruteForceSerial(benchmark::State &state) {
  const auto table = kernels::CodeTable::from(make_dihedral(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::covering_radius_serial(table).value);
}

void BM_BruteForceOmp(benchmark::State &state) {
  const auto table = kernels::CodeTable::from(make_dihedral(static_cast<int>(state.range(0))));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::covering_radius_omp(table, threads).value);
}

void BM_RestrictedSerial(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = kernels::CodeTable::from(make_dihedral(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::restricted_serial(table, dn_bounds(n).lower).value);
}

void BM_RestrictedOmp(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto table = kernels::CodeTable::from(make_dihedral(n));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::restricted_omp(table, dn_bounds(n).lower, threads).value);
}

} // namespace

BENCHMARK(BM_BruteForceSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceOmp)->Args({8, 1})->Args({8, 4})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestrictedSerial)->Arg(10)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestrictedOmp)
    ->Args({10, 1})
    ->Args({11, 1})
    ->Args({12, 1})
    ->Args({12, 4})
    ->Args({14, 1})
    ->Args({14, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
