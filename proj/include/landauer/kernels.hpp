#pragma once

// Data-parallel inner loops. Every kernel has a straightforward serial
// version kept as the reference for tests and benchmarks, and an OpenMP
// version used by the library. Both return identical results for any thread
// count: parallel work is split into fixed, thread-count-independent units
// and only exact (integer) reductions or per-index writes are used.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

#include "landauer/truth_map.hpp"

namespace landauer {
class MaxwellianMap;
}

namespace landauer::kernels {

// Samples handled by one RNG stream in the microstate sampler.
inline constexpr std::uint64_t kSamplesPerStream = std::uint64_t{1} << 16;

// Lexicographic rank -> permutation of 0..n-1 (factorial number system).
void unrank_permutation(std::uint64_t rank, std::span<std::uint32_t> out);

std::uint64_t factorial(unsigned n);

namespace serial {

// counts[s] = number of inputs x with table[x] = s.
std::vector<std::uint64_t> output_histogram(std::span<const BitState> table,
                                            std::size_t output_states);

// Histogram of `samples` microstates of `particles` independent particles,
// each uniform over `cells` positions; state id = sum cell_i * cells^i.
// Samples are drawn from consecutive streams of kSamplesPerStream.
std::vector<std::uint64_t> microstate_histogram(unsigned particles, unsigned cells,
                                                std::uint64_t samples, std::uint64_t seed);

void maxwellian_quantiles(const MaxwellianMap& map, std::span<const double> u,
                          std::span<double> speeds);

// Calls fn(permutation) for every permutation of 0..n-1 in lexicographic
// order and collects the results. fn must not throw (it may run inside an
// OpenMP region in the parallel variant).
template <typename Fn>
auto over_permutations(unsigned n, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::span<const std::uint32_t>>;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Result> out;
  out.reserve(factorial(n));
  do {
    out.push_back(fn(std::span<const std::uint32_t>(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// out[i] = fn(i) for i in [0, count).
template <typename Fn>
auto over_trials(std::uint64_t count, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::uint64_t>;
  std::vector<Result> out(count);
  for (std::uint64_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> output_histogram(std::span<const BitState> table,
                                            std::size_t output_states);

std::vector<std::uint64_t> microstate_histogram(unsigned particles, unsigned cells,
                                                std::uint64_t samples, std::uint64_t seed);

void maxwellian_quantiles(const MaxwellianMap& map, std::span<const double> u,
                          std::span<double> speeds);

template <typename Fn>
auto over_permutations(unsigned n, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::span<const std::uint32_t>>;
  const auto total = static_cast<std::int64_t>(factorial(n));
  std::vector<Result> out(static_cast<std::size_t>(total));
#pragma omp parallel
  {
    std::vector<std::uint32_t> perm(n);
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      unrank_permutation(static_cast<std::uint64_t>(k), perm);
      out[static_cast<std::size_t>(k)] = fn(std::span<const std::uint32_t>(perm));
    }
  }
  return out;
}

template <typename Fn>
auto over_trials(std::uint64_t count, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::uint64_t>;
  std::vector<Result> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::uint64_t>(i));
  }
  return out;
}

}  // namespace parallel

}  // namespace landauer::kernels
