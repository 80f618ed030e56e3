#include "landauer/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "landauer/errors.hpp"

namespace landauer {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void validate_probs(std::span<const double> probs) {
  if (probs.empty()) throw ValidationError("distribution has no states");
  if (probs.size() > kMaxDenseStates) {
    throw ValidationError("distribution over " + std::to_string(probs.size()) +
                          " states exceeds the dense limit of 2^24");
  }
  CompensatedSum total;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("probability at state " + std::to_string(i) +
                            " is negative or not finite");
    }
    total.add(p);
  }
  if (std::abs(total.value() - 1.0) > kNormalizationTolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(total.value()) +
                          ", not 1");
  }
}

double entropy_of(std::span<const double> probs) {
  CompensatedSum h;
  for (double p : probs) {
    if (p > 0.0) h.add(-p * std::log2(p));
  }
  // Rounding can leave a point mass at -0 or a hair below zero.
  return std::max(0.0, h.value());
}

}  // namespace

EntropyBits::EntropyBits(double bits) : bits_(bits) {
  if (std::isnan(bits) || bits < 0.0) {
    throw DomainError("entropy must be nonnegative, got " + std::to_string(bits));
  }
}

Temperature::Temperature(double kelvin) : kelvin_(kelvin) {
  if (!std::isfinite(kelvin) || kelvin <= 0.0) {
    throw DomainError("temperature must be a positive number of kelvins");
  }
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  validate_probs(probs_);
}

Distribution Distribution::uniform(std::size_t states) {
  if (states == 0) throw ValidationError("distribution has no states");
  return Distribution(std::vector<double>(states, 1.0 / static_cast<double>(states)));
}

Distribution Distribution::point_mass(std::size_t states, std::size_t at) {
  if (at >= states) throw ValidationError("point mass outside the state space");
  std::vector<double> probs(states, 0.0);
  probs[at] = 1.0;
  return Distribution(std::move(probs));
}

EntropyBits shannon_entropy_bits(const Distribution& d) { return EntropyBits(entropy_of(d.probs())); }

EntropyBits shannon_entropy_bits(std::span<const double> probs) {
  validate_probs(probs);
  return EntropyBits(entropy_of(probs));
}

EntropyBits histogram_entropy_bits(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw ValidationError("histogram is empty");
  const double n = static_cast<double>(total);
  // H = log2 n - (1/n) sum c log2 c, which keeps the counts exact.
  CompensatedSum weighted;
  for (auto c : counts) {
    if (c > 1) {
      const double x = static_cast<double>(c);
      weighted.add(x * std::log2(x));
    }
  }
  return EntropyBits(std::max(0.0, std::log2(n) - weighted.value() / n));
}

EntropyBits log2_states(std::uint64_t states) {
  if (states == 0) throw DomainError("a state space needs at least one microstate");
  return EntropyBits(std::log2(static_cast<double>(states)));
}

EntropyBits log2_power(std::uint64_t base, double exponent) {
  if (base == 0) throw DomainError("a state space needs at least one microstate");
  if (!(exponent >= 0.0)) throw DomainError("state-space exponent must be nonnegative");
  return EntropyBits(exponent * std::log2(static_cast<double>(base)));
}

Distribution image_distribution(const TruthMap& map, const Distribution& d) {
  if (d.size() != map.input_states()) {
    throw ValidationError("distribution has " + std::to_string(d.size()) +
                          " states but the map has " + std::to_string(map.input_states()) +
                          " inputs");
  }
  if (map.output_states() > kMaxDenseStates) {
    throw ValidationError("output space exceeds the dense limit of 2^24");
  }
  std::vector<double> q(map.output_states(), 0.0);
  const auto table = map.table();
  for (std::size_t x = 0; x < table.size(); ++x) q[table[x]] += d[x];
  return Distribution(Distribution::Pushforward{}, std::move(q));
}

double bits_to_joules(EntropyBits bits, Temperature t) {
  return bits.bits() * kBoltzmann * t.kelvin() * std::numbers::ln2;
}

}  // namespace landauer
