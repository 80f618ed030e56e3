#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace landauer {

// Maxwell-Boltzmann speed distribution with scale a = sqrt(kT/m).
class MaxwellianMap {
 public:
  // Throws DomainError unless scale > 0 and tolerance > 0.
  explicit MaxwellianMap(double scale = 1.0, double tolerance = 1e-12);

  double scale() const noexcept { return scale_; }
  double tolerance() const noexcept { return tolerance_; }

  // F(x) = erf(x / (sqrt2 a)) - sqrt(2/pi) (x/a) exp(-x^2 / (2a^2)), x >= 0.
  double cdf(double speed) const;

  // F^-1(u) for u in [0, 1) by bisection on
  // [0, a (sqrt(2 ln(1/(1-u))) + 10)]. Throws NumericalError when the result
  // is not finite or the residual exceeds the tolerance.
  double quantile(double u) const;

  // 2a sqrt(2/pi).
  double mean_speed() const;

 private:
  double scale_;
  double tolerance_;
};

// speed_i = F^-1((rank_i + 1/2) / N), where rank orders values ascending and
// breaks ties by original index. Strictly increasing in rank.
std::vector<double> quantile_map_to_maxwellian(std::span<const std::uint64_t> values,
                                               const MaxwellianMap& map);

// Rank of each value (ascending, ties by index).
std::vector<std::size_t> value_ranks(std::span<const std::uint64_t> values);

}  // namespace landauer
