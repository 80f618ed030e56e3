#include "landauer/demon.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "landauer/errors.hpp"
#include "landauer/kernels.hpp"

namespace landauer {

std::string_view to_string(DemonMode mode) {
  return mode == DemonMode::two_domain ? "two_domain" : "n_cells";
}

DemonMode demon_mode_from_string(std::string_view name) {
  if (name == "two_domain") return DemonMode::two_domain;
  if (name == "n_cells") return DemonMode::n_cells;
  throw DomainError("unknown demon mode '" + std::string(name) + "'");
}

double DemonResult::work_joules(Temperature t) const {
  return bits_to_joules(EntropyBits(entropy_before_bits.bits() - entropy_after_bits.bits()), t);
}

EntropyBits miller_madow_entropy_bits(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  std::uint64_t occupied = 0;
  for (auto c : counts) {
    total += c;
    if (c > 0) ++occupied;
  }
  const EntropyBits plug_in = histogram_entropy_bits(counts);
  const double correction =
      static_cast<double>(occupied - 1) / (2.0 * static_cast<double>(total) * std::numbers::ln2);
  return EntropyBits(plug_in.bits() + correction);
}

DemonResult simulate_demon(const DemonConfig& cfg) {
  if (cfg.particles == 0) throw ValidationError("the demon needs at least one particle");
  if (cfg.samples == 0) throw ValidationError("the demon needs at least one sample");

  const std::uint64_t n = cfg.particles;
  DemonResult result;
  // The demon leaves every particle in a known place: one microstate.
  result.entropy_after_bits = log2_states(1);
  if (cfg.mode == DemonMode::two_domain) {
    result.entropy_before_bits = log2_power(2, static_cast<double>(n));
  } else {
    result.entropy_before_bits = log2_power(n, static_cast<double>(n));
  }
  if (!cfg.estimate) return result;

  const unsigned cells = cfg.mode == DemonMode::two_domain ? 2u : static_cast<unsigned>(n);
  // Joint space is cells^n; compare in log space to avoid overflow.
  if (result.entropy_before_bits.bits() > 20.0 + 1e-12) {
    throw CapacityError("joint state space of " + std::to_string(n) + " particles in " +
                        std::string(to_string(cfg.mode)) +
                        " mode exceeds 2^20 states; use analytic mode");
  }
  const auto counts = kernels::parallel::microstate_histogram(static_cast<unsigned>(n), cells,
                                                              cfg.samples, cfg.seed);
  std::uint64_t occupied = 0;
  for (auto c : counts) occupied += c > 0 ? 1 : 0;
  result.entropy_estimate_bits = miller_madow_entropy_bits(counts);
  result.observed_states = occupied;
  return result;
}

double analytic_separation_work(const ProblemSpec& p, Temperature t) {
  p.validate();
  if (!p.is_search_family()) {
    throw DomainError("separation work is defined only for the max, sort and search problems");
  }
  return bits_to_joules(bound_bits(p), t);
}

}  // namespace landauer
