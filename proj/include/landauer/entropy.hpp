#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "landauer/truth_map.hpp"

namespace landauer {

// Boltzmann constant, exact SI value (J/K).
inline constexpr double kBoltzmann = 1.380649e-23;

// Probabilities must sum to one within this absolute tolerance.
inline constexpr double kNormalizationTolerance = 1e-12;

// Relative tolerance used when comparing entropies computed by different
// routes.
inline constexpr double kEntropyRelTolerance = 1e-9;

// Dense distributions are limited to 2^24 microstates.
inline constexpr std::size_t kMaxDenseStates = std::size_t{1} << 24;

// Entropy or energy in units of k ln 2.
class EntropyBits {
 public:
  constexpr EntropyBits() = default;
  // Throws DomainError for negative or NaN values.
  explicit EntropyBits(double bits);

  constexpr double bits() const noexcept { return bits_; }

  friend EntropyBits operator+(EntropyBits a, EntropyBits b) { return EntropyBits(a.bits_ + b.bits_); }
  friend constexpr auto operator<=>(const EntropyBits&, const EntropyBits&) = default;

 private:
  double bits_ = 0.0;
};

class Temperature {
 public:
  // Throws DomainError unless kelvin > 0 and finite.
  explicit Temperature(double kelvin);
  double kelvin() const noexcept { return kelvin_; }

 private:
  double kelvin_;
};

// Probability vector over microstates 0..W-1.
class Distribution {
 public:
  // Throws ValidationError on negative entries, non-finite entries, an empty
  // vector, more than kMaxDenseStates entries, or |sum - 1| > 1e-12.
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(std::size_t states);
  static Distribution point_mass(std::size_t states, std::size_t at);

  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  struct Pushforward {};
  // Mass-preserving construction from an already valid distribution.
  Distribution(Pushforward, std::vector<double> probs) : probs_(std::move(probs)) {}
  friend Distribution image_distribution(const TruthMap& map, const Distribution& d);

  std::vector<double> probs_;
};

// -sum p log2 p with 0 log 0 = 0, compensated summation.
EntropyBits shannon_entropy_bits(const Distribution& d);

// Same, validating a raw probability vector first.
EntropyBits shannon_entropy_bits(std::span<const double> probs);

// Entropy of an empirical histogram with `total` observations.
EntropyBits histogram_entropy_bits(std::span<const std::uint64_t> counts);

// log2 W; throws DomainError for W = 0.
EntropyBits log2_states(std::uint64_t states);

// log2(base^exponent) for state spaces too large to count, e.g. N^N.
EntropyBits log2_power(std::uint64_t base, double exponent);

// Pushforward of d through map: q[s] = sum of d[x] over x with map(x) = s.
Distribution image_distribution(const TruthMap& map, const Distribution& d);

double bits_to_joules(EntropyBits bits, Temperature t);

}  // namespace landauer
