#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "landauer/bounds.hpp"
#include "landauer/entropy.hpp"

namespace landauer {

// two_domain: each particle in the left or right half of the box.
// n_cells: each of N particles in one of N velocity-ordered cells.
enum class DemonMode { two_domain, n_cells };

std::string_view to_string(DemonMode mode);
DemonMode demon_mode_from_string(std::string_view name);

// Largest joint state space the empirical estimator will histogram.
inline constexpr std::uint64_t kMaxDemonStates = std::uint64_t{1} << 20;

struct DemonConfig {
  std::uint64_t particles = 1;
  DemonMode mode = DemonMode::two_domain;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  // When false only the analytic entropies are produced and no state-space
  // limit applies.
  bool estimate = true;
};

struct DemonResult {
  EntropyBits entropy_before_bits;
  EntropyBits entropy_after_bits;
  // Plug-in estimate with Miller-Madow correction; absent in analytic mode.
  std::optional<EntropyBits> entropy_estimate_bits;
  std::uint64_t observed_states = 0;

  // Minimum work the demon must spend: T (S_before - S_after).
  double work_joules(Temperature t) const;
};

// Throws ValidationError for N = 0 or samples = 0, CapacityError when the
// estimator would need more than 2^20 joint states.
DemonResult simulate_demon(const DemonConfig& cfg);

// Plug-in entropy of a histogram plus (K - 1) / (2 n ln 2) bits, K the
// number of occupied states and n the sample count.
EntropyBits miller_madow_entropy_bits(std::span<const std::uint64_t> counts);

// bits_to_joules(bound_bits(p), t) for the max, sort and search problems.
double analytic_separation_work(const ProblemSpec& p, Temperature t);

}  // namespace landauer
