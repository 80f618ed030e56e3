#include "landauer/maxwellian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "landauer/errors.hpp"
#include "landauer/kernels.hpp"

namespace landauer {

MaxwellianMap::MaxwellianMap(double scale, double tolerance) : scale_(scale), tolerance_(tolerance) {
  if (!std::isfinite(scale) || scale <= 0.0) throw DomainError("Maxwellian scale must be positive");
  if (!std::isfinite(tolerance) || tolerance <= 0.0) {
    throw DomainError("inversion tolerance must be positive");
  }
}

double MaxwellianMap::cdf(double speed) const {
  if (speed <= 0.0) return 0.0;
  const double r = speed / scale_;
  return std::erf(r / std::numbers::sqrt2) -
         std::sqrt(2.0 / std::numbers::pi) * r * std::exp(-0.5 * r * r);
}

double MaxwellianMap::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0)) {
    throw DomainError("quantile level must lie in [0, 1), got " + std::to_string(u));
  }
  if (u == 0.0) return 0.0;
  double lo = 0.0;
  double hi = scale_ * (std::sqrt(2.0 * std::log(1.0 / (1.0 - u))) + 10.0);
  // Bisect to adjacent doubles; F is strictly increasing on (0, inf).
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (cdf(mid) < u ? lo : hi) = mid;
  }
  const double x = std::abs(cdf(lo) - u) <= std::abs(cdf(hi) - u) ? lo : hi;
  if (!std::isfinite(x) || std::abs(cdf(x) - u) > tolerance_) {
    throw NumericalError("Maxwellian inversion failed at u = " + std::to_string(u));
  }
  return x;
}

double MaxwellianMap::mean_speed() const {
  return 2.0 * scale_ * std::sqrt(2.0 / std::numbers::pi);
}

std::vector<std::size_t> value_ranks(std::span<const std::uint64_t> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<std::size_t> rank(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

std::vector<double> quantile_map_to_maxwellian(std::span<const std::uint64_t> values,
                                               const MaxwellianMap& map) {
  if (values.empty()) throw ValidationError("no values to map");
  const auto rank = value_ranks(values);
  const double n = static_cast<double>(values.size());
  std::vector<double> u(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    u[i] = (static_cast<double>(rank[i]) + 0.5) / n;
  }
  std::vector<double> speeds(values.size());
  kernels::parallel::maxwellian_quantiles(map, u, speeds);
  return speeds;
}

}  // namespace landauer
