#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "landauer/entropy.hpp"

namespace landauer {

enum class ProblemKind { MaxOfN, Sort, OrderedSearch, MatMul, Add, Mul, Compare };

std::string_view to_string(ProblemKind kind);
// Accepts the CLI names: max, sort, search, matmul, add, mul, compare.
ProblemKind problem_kind_from_string(std::string_view name);

// A problem family with its size parameters. N counts elements (MaxOfN,
// Sort, OrderedSearch); M is the bit width of one element; n is the matrix
// dimension (MatMul) or operand width (Add, Mul, Compare).
struct ProblemSpec {
  ProblemKind kind = ProblemKind::MaxOfN;
  std::uint64_t N = 1;
  std::uint32_t M = 1;
  std::uint32_t n = 1;

  static ProblemSpec max_of_n(std::uint64_t count, std::uint32_t bits = 1) {
    return {ProblemKind::MaxOfN, count, bits, 1};
  }
  static ProblemSpec sort(std::uint64_t count, std::uint32_t bits = 1) {
    return {ProblemKind::Sort, count, bits, 1};
  }
  static ProblemSpec ordered_search(std::uint64_t count, std::uint32_t bits = 1) {
    return {ProblemKind::OrderedSearch, count, bits, 1};
  }
  static ProblemSpec matmul(std::uint32_t dim, std::uint32_t element_bits) {
    return {ProblemKind::MatMul, 1, element_bits, dim};
  }
  static ProblemSpec add(std::uint32_t bits) { return {ProblemKind::Add, 1, 1, bits}; }
  static ProblemSpec mul(std::uint32_t bits) { return {ProblemKind::Mul, 1, 1, bits}; }
  static ProblemSpec compare(std::uint32_t bits) { return {ProblemKind::Compare, 1, 1, bits}; }

  // Throws ValidationError when a size parameter is zero.
  void validate() const;
  bool is_search_family() const noexcept {
    return kind == ProblemKind::MaxOfN || kind == ProblemKind::Sort ||
           kind == ProblemKind::OrderedSearch;
  }

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

// Entropy reduction each problem requires:
//   MaxOfN N, Sort N log2 N, OrderedSearch log2 N, MatMul n^2 (log2 n + 2m),
//   Add n+1, Mul 2n, Compare 1.
EntropyBits bound_bits(const ProblemSpec& p);

enum class SuffixConstraint { free, one_hot, permutation_index, position_index };

std::string_view to_string(SuffixConstraint c);

// Problem-space layout: a prefix holding the inputs followed by a suffix
// that receives the answer.
struct EncodingLayout {
  double prefix_bits = 0;
  double suffix_bits = 0;
  SuffixConstraint constraint = SuffixConstraint::free;
};

struct EncodingEntropy {
  EncodingLayout layout;
  EntropyBits s1;  // prefix and suffix both uniform
  EntropyBits s2;  // suffix determined by the prefix
};

// Explicit problem-space encodings for MaxOfN, Sort and OrderedSearch.
// Throws DomainError for other kinds.
EncodingEntropy encoding_entropy(const ProblemSpec& p);

// bound_bits / 1 bit per comparison. Throws DomainError outside the
// MaxOfN / Sort / OrderedSearch family.
double time_lower_bound_steps(const ProblemSpec& p);

// Comparison-model lower bounds: N-1, ceil(log2 N!), ceil(log2(N+1)).
// Throws DomainError outside the MaxOfN / Sort / OrderedSearch family.
std::uint64_t classical_comparison_bound(const ProblemSpec& p);

// ceil(log2 N!) for any N.
std::uint64_t ceil_log2_factorial(std::uint64_t n);

// sqrt(N): per-iteration energy capacity ratio of quadratic-speedup search.
double grover_energy_ratio(std::uint64_t n);

struct BoundReport {
  ProblemSpec problem;
  EntropyBits entropy_bound_bits;
  std::optional<std::uint64_t> classical_bound_ops;
  std::optional<double> time_steps_lower;
  std::optional<EncodingEntropy> encoding;
};

BoundReport bound_report(const ProblemSpec& p);

}  // namespace landauer
