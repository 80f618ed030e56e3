#include "landauer/bounds.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "landauer/errors.hpp"

namespace landauer {

namespace {

constexpr std::array<std::pair<ProblemKind, std::string_view>, 7> kProblemNames{{
    {ProblemKind::MaxOfN, "max"},
    {ProblemKind::Sort, "sort"},
    {ProblemKind::OrderedSearch, "search"},
    {ProblemKind::MatMul, "matmul"},
    {ProblemKind::Add, "add"},
    {ProblemKind::Mul, "mul"},
    {ProblemKind::Compare, "compare"},
}};

void require_search_family(const ProblemSpec& p, const char* op) {
  p.validate();
  if (!p.is_search_family()) {
    throw DomainError(std::string(op) + " is defined only for max, sort and search problems, not " +
                      std::string(to_string(p.kind)));
  }
}

double log2_u64(std::uint64_t x) { return std::log2(static_cast<double>(x)); }

std::uint64_t exact_ceil_log2_factorial(std::uint64_t n) {
  boost::multiprecision::cpp_int f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  f -= 1;
  return f == 0 ? 0 : static_cast<std::uint64_t>(boost::multiprecision::msb(f)) + 1;
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  for (const auto& [k, name] : kProblemNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ProblemKind problem_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kProblemNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown problem '" + std::string(name) + "'");
}

void ProblemSpec::validate() const {
  if (N == 0 || M == 0 || n == 0) {
    throw ValidationError("problem size parameters must be at least 1");
  }
}

EntropyBits bound_bits(const ProblemSpec& p) {
  p.validate();
  const double N = static_cast<double>(p.N);
  const double n = p.n;
  switch (p.kind) {
    case ProblemKind::MaxOfN: return EntropyBits(N);
    case ProblemKind::Sort: return EntropyBits(N * log2_u64(p.N));
    case ProblemKind::OrderedSearch: return EntropyBits(log2_u64(p.N));
    case ProblemKind::MatMul: return EntropyBits(n * n * (std::log2(n) + 2.0 * p.M));
    case ProblemKind::Add: return EntropyBits(n + 1.0);
    case ProblemKind::Mul: return EntropyBits(2.0 * n);
    case ProblemKind::Compare: return EntropyBits(1.0);
  }
  throw DomainError("unsupported problem kind");
}

std::string_view to_string(SuffixConstraint c) {
  switch (c) {
    case SuffixConstraint::free: return "free";
    case SuffixConstraint::one_hot: return "one-hot";
    case SuffixConstraint::permutation_index: return "permutation-index";
    case SuffixConstraint::position_index: return "position-index";
  }
  return "unknown";
}

EncodingEntropy encoding_entropy(const ProblemSpec& p) {
  require_search_family(p, "encoding_entropy");
  const double N = static_cast<double>(p.N);
  const double M = p.M;
  EncodingLayout layout;
  switch (p.kind) {
    case ProblemKind::MaxOfN:
      // N numbers, then an N-bit one-hot marker of the maximum.
      layout = {N * M, N, SuffixConstraint::one_hot};
      break;
    case ProblemKind::Sort:
      // N numbers, then a log2 N-bit target position per number.
      layout = {N * M, N * log2_u64(p.N), SuffixConstraint::permutation_index};
      break;
    case ProblemKind::OrderedSearch:
      // N ordered numbers plus the key, then a log2 N-bit position.
      layout = {N * M + M, log2_u64(p.N), SuffixConstraint::position_index};
      break;
    default:
      break;
  }
  // Before: every prefix and suffix state equally likely. After: the suffix
  // is a function of the prefix, leaving only the prefix states.
  const EntropyBits s1 = log2_power(2, layout.prefix_bits + layout.suffix_bits);
  const EntropyBits s2 = log2_power(2, layout.prefix_bits);
  return EncodingEntropy{layout, s1, s2};
}

double time_lower_bound_steps(const ProblemSpec& p) {
  require_search_family(p, "time_lower_bound_steps");
  constexpr double kBitsPerComparison = 1.0;
  return bound_bits(p).bits() / kBitsPerComparison;
}

std::uint64_t ceil_log2_factorial(std::uint64_t n) {
  if (n <= 20) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return static_cast<std::uint64_t>(std::bit_width(f - 1));
  }
  // Neumaier-compensated sum of log2 k; falls back to exact big-integer
  // arithmetic when the result sits too close to an integer to round safely.
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const double x = log2_u64(k);
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  const double value = sum + comp;
  const double nearest = std::round(value);
  if (std::abs(value - nearest) < 1e-6) {
    return exact_ceil_log2_factorial(n);
  }
  return static_cast<std::uint64_t>(std::ceil(value));
}

std::uint64_t classical_comparison_bound(const ProblemSpec& p) {
  require_search_family(p, "classical_comparison_bound");
  switch (p.kind) {
    case ProblemKind::MaxOfN: return p.N - 1;
    case ProblemKind::Sort: return ceil_log2_factorial(p.N);
    // ceil(log2(N+1)) is the bit width of N.
    case ProblemKind::OrderedSearch: return static_cast<std::uint64_t>(std::bit_width(p.N));
    default: break;
  }
  throw DomainError("unsupported problem kind");
}

double grover_energy_ratio(std::uint64_t n) {
  if (n == 0) throw DomainError("search space must contain at least one item");
  return std::sqrt(static_cast<double>(n));
}

BoundReport bound_report(const ProblemSpec& p) {
  BoundReport r{p, bound_bits(p), std::nullopt, std::nullopt, std::nullopt};
  if (p.is_search_family()) {
    r.classical_bound_ops = classical_comparison_bound(p);
    r.time_steps_lower = time_lower_bound_steps(p);
    r.encoding = encoding_entropy(p);
  }
  return r;
}

}  // namespace landauer
