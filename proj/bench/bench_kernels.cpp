// Serial reference kernels against their OpenMP versions.
//
//   ./landauer_bench --benchmark_filter=Histogram
//   OMP_NUM_THREADS=4 ./landauer_bench

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "landauer/algorithms.hpp"
#include "landauer/gates.hpp"
#include "landauer/kernels.hpp"
#include "landauer/maxwellian.hpp"

using namespace landauer;

namespace {

void BM_OutputHistogram_Serial(benchmark::State& state) {
  const TruthMap map = standard_map(GateKind::mul, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::output_histogram(map.table(), map.output_states()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(map.input_states()));
}

void BM_OutputHistogram_Parallel(benchmark::State& state) {
  const TruthMap map = standard_map(GateKind::mul, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::parallel::output_histogram(map.table(), map.output_states()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(map.input_states()));
}

void BM_Microstates_Serial(benchmark::State& state) {
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::microstate_histogram(12, 2, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Microstates_Parallel(benchmark::State& state) {
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::parallel::microstate_histogram(12, 2, samples, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<double> u_grid(std::size_t n) {
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = (i + 0.5) / n;
  return u;
}

void BM_Quantiles_Serial(benchmark::State& state) {
  const MaxwellianMap map;
  const auto u = u_grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(u.size());
  for (auto _ : state) {
    kernels::serial::maxwellian_quantiles(map, u, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Quantiles_Parallel(benchmark::State& state) {
  const MaxwellianMap map;
  const auto u = u_grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(u.size());
  for (auto _ : state) {
    kernels::parallel::maxwellian_quantiles(map, u, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::uint64_t merge_cost(std::span<const std::uint32_t> perm) {
  std::vector<Value> v(perm.begin(), perm.end());
  EnergyLedger ledger;
  merge_sort(v, ledger);
  return ledger.comparisons();
}

void BM_Permutations_Serial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::over_permutations(n, merge_cost));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kernels::factorial(n)));
}

void BM_Permutations_Parallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::over_permutations(n, merge_cost));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kernels::factorial(n)));
}

}  // namespace

BENCHMARK(BM_OutputHistogram_Serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OutputHistogram_Parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Microstates_Serial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Microstates_Parallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Quantiles_Serial)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Quantiles_Parallel)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Permutations_Serial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Permutations_Parallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
