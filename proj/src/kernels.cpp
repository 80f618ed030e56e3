#include "landauer/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

#include "landauer/maxwellian.hpp"
#include "landauer/rng.hpp"

namespace landauer::kernels {

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

void unrank_permutation(std::uint64_t rank, std::span<std::uint32_t> out) {
  const auto n = static_cast<unsigned>(out.size());
  // Lehmer digits, most significant first.
  std::uint32_t remaining = n;
  std::uint32_t pool[21];
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t block = factorial(n - 1 - i);
    const auto digit = static_cast<std::uint32_t>(rank / block);
    rank %= block;
    out[i] = pool[digit];
    for (std::uint32_t j = digit; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
    --remaining;
  }
}

namespace {

// One stream's worth of samples added into counts.
void sample_stream(unsigned particles, unsigned cells, std::uint64_t count, std::uint64_t seed,
                   std::uint64_t* counts) {
  Rng rng(seed);
  if (cells == 2) {
    const std::uint64_t mask = particles >= 64 ? ~0ULL : ((1ULL << particles) - 1);
    for (std::uint64_t s = 0; s < count; ++s) ++counts[rng.next() & mask];
    return;
  }
  for (std::uint64_t s = 0; s < count; ++s) {
    std::uint64_t state = 0;
    std::uint64_t place = 1;
    for (unsigned p = 0; p < particles; ++p) {
      state += rng.below(cells) * place;
      place *= cells;
    }
    ++counts[state];
  }
}

std::uint64_t state_space(unsigned particles, unsigned cells) {
  std::uint64_t w = 1;
  for (unsigned p = 0; p < particles; ++p) w *= cells;
  return w;
}

}  // namespace

namespace serial {

std::vector<std::uint64_t> output_histogram(std::span<const BitState> table,
                                            std::size_t output_states) {
  std::vector<std::uint64_t> counts(output_states, 0);
  for (BitState out : table) ++counts[out];
  return counts;
}

std::vector<std::uint64_t> microstate_histogram(unsigned particles, unsigned cells,
                                                std::uint64_t samples, std::uint64_t seed) {
  std::vector<std::uint64_t> counts(state_space(particles, cells), 0);
  const std::uint64_t streams = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
  for (std::uint64_t k = 0; k < streams; ++k) {
    const std::uint64_t n = std::min(kSamplesPerStream, samples - k * kSamplesPerStream);
    sample_stream(particles, cells, n, stream_seed(seed, k), counts.data());
  }
  return counts;
}

void maxwellian_quantiles(const MaxwellianMap& map, std::span<const double> u,
                          std::span<double> speeds) {
  for (std::size_t i = 0; i < u.size(); ++i) speeds[i] = map.quantile(u[i]);
}

}  // namespace serial

namespace parallel {

namespace {
// Below this many items a thread team costs more than it saves.
constexpr std::int64_t kParallelMinItems = 4096;
// Larger output spaces share one histogram with atomic increments instead
// of a private copy per thread.
constexpr std::size_t kPrivateHistogramLimit = std::size_t{1} << 16;

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}
}  // namespace

std::vector<std::uint64_t> output_histogram(std::span<const BitState> table,
                                            std::size_t output_states) {
  if (max_threads() == 1) return serial::output_histogram(table, output_states);
  std::vector<std::uint64_t> counts(output_states, 0);
  const auto n = static_cast<std::int64_t>(table.size());
  if (output_states > kPrivateHistogramLimit) {
#pragma omp parallel for schedule(static) if (n >= kParallelMinItems)
    for (std::int64_t i = 0; i < n; ++i) {
#pragma omp atomic
      ++counts[table[static_cast<std::size_t>(i)]];
    }
    return counts;
  }
#pragma omp parallel if (n >= kParallelMinItems)
  {
    std::vector<std::uint64_t> local(output_states, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) ++local[table[static_cast<std::size_t>(i)]];
#pragma omp critical(landauer_histogram_merge)
    for (std::size_t s = 0; s < output_states; ++s) counts[s] += local[s];
  }
  return counts;
}

std::vector<std::uint64_t> microstate_histogram(unsigned particles, unsigned cells,
                                                std::uint64_t samples, std::uint64_t seed) {
  const std::uint64_t w = state_space(particles, cells);
  std::vector<std::uint64_t> counts(w, 0);
  const auto streams =
      static_cast<std::int64_t>((samples + kSamplesPerStream - 1) / kSamplesPerStream);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(w, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t k = 0; k < streams; ++k) {
      const auto stream = static_cast<std::uint64_t>(k);
      const std::uint64_t n = std::min(kSamplesPerStream, samples - stream * kSamplesPerStream);
      sample_stream(particles, cells, n, stream_seed(seed, stream), local.data());
    }
#pragma omp critical(landauer_histogram_merge)
    for (std::uint64_t s = 0; s < w; ++s) counts[s] += local[s];
  }
  return counts;
}

void maxwellian_quantiles(const MaxwellianMap& map, std::span<const double> u,
                          std::span<double> speeds) {
  const auto n = static_cast<std::int64_t>(u.size());
  // quantile() may throw; exceptions cannot leave the parallel region, so a
  // failure is replayed serially to surface the original error.
  bool failed = false;
#pragma omp parallel for schedule(static) reduction(|| : failed) if (n >= 64)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      speeds[static_cast<std::size_t>(i)] = map.quantile(u[static_cast<std::size_t>(i)]);
    } catch (...) {
      failed = true;
    }
  }
  if (failed) serial::maxwellian_quantiles(map, u, speeds);
}

}  // namespace parallel

}  // namespace landauer::kernels
