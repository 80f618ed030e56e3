#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "landauer/bounds.hpp"
#include "landauer/ledger.hpp"

namespace landauer {

using Value = std::uint64_t;

// Reference algorithms instrumented with an EnergyLedger. Only data
// comparisons are charged; loop control is free and every element move or
// swap half is an Assignment (cost 0).
enum class Algorithm { max_scan, bubble_sort, merge_sort, binary_search, radix_sort };

std::string_view to_string(Algorithm a);
// Accepts full names and the short forms max, bubble, merge, binary, radix.
Algorithm algorithm_from_string(std::string_view name);
bool is_comparison_algorithm(Algorithm a);
// Problem kind the algorithm solves.
ProblemKind problem_of(Algorithm a);

// Index of the first maximum; exactly N-1 comparisons.
std::size_t max_scan(std::span<const Value> values, EnergyLedger& ledger);

// Exchange loop: for each i, for each j > i, swap when x[i] > x[j].
// Always N(N-1)/2 comparisons.
void bubble_sort(std::span<Value> values, EnergyLedger& ledger);

// Top-down, stable; the left half takes ceil(n/2) elements.
void merge_sort(std::span<Value> values, EnergyLedger& ledger);

// Three-way probe per step, charged as one comparison. Returns some index
// holding key, or nullopt. Throws PreconditionError on unsorted input.
std::optional<std::size_t> binary_search(std::span<const Value> sorted, Value key,
                                         EnergyLedger& ledger);

struct RadixOptions {
  std::uint64_t buckets = 2;
  unsigned passes = 1;
  // Charge erasure of the occupied bucket slots between passes.
  bool charge_bucket_clearing = false;

  friend bool operator==(const RadixOptions&, const RadixOptions&) = default;
};

// Bits recorded per bucket placement: ceil(log2 B).
unsigned radix_slot_bits(std::uint64_t buckets);

// LSD radix sort with B buckets and d digit passes. Each placement charges
// BucketWrite(ceil(log2 B)). Throws PreconditionError when B < 2, d = 0 or a
// key is not below B^d.
void radix_sort(std::span<Value> values, const RadixOptions& options, EnergyLedger& ledger);

struct MaxIndex {
  std::size_t index;
  friend bool operator==(const MaxIndex&, const MaxIndex&) = default;
};
struct SortedValues {
  std::vector<Value> values;
  friend bool operator==(const SortedValues&, const SortedValues&) = default;
};
struct SearchOutcome {
  std::optional<std::size_t> position;
  friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};
using Answer = std::variant<MaxIndex, SortedValues, SearchOutcome>;

struct AlgorithmInput {
  std::vector<Value> values;
  Value key = 0;             // binary_search
  RadixOptions radix = {};   // radix_sort
};

struct RunResult {
  Answer answer;
  EnergyLedger ledger;
};

// Throws PreconditionError for empty input and the per-algorithm
// preconditions above.
RunResult run_algorithm(Algorithm algorithm, const AlgorithmInput& input,
                        EnergyLedger ledger = {});

// Exact comparison counts of merge_sort:
//   worst C(n) = C(ceil(n/2)) + C(floor(n/2)) + n - 1
//   best  B(n) = B(ceil(n/2)) + B(floor(n/2)) + floor(n/2)
std::uint64_t merge_sort_worst_comparisons(std::uint64_t n);
std::uint64_t merge_sort_best_comparisons(std::uint64_t n);

// A permutation of 0..n-1 on which merge_sort makes C(n) comparisons: every
// merge interleaves its runs completely.
std::vector<Value> merge_sort_worst_case_input(std::size_t n);

struct BitsSummary {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct ProfileOptions {
  // Defaults to B = 2^ceil(log2 N) (at least 2) and enough passes for M-bit keys.
  std::optional<RadixOptions> radix;
  // Enumerate all permutations of 0..N-1 (max, sort; N <= 10) or all keys and
  // gaps (search) instead of drawing random inputs; `trials` is then ignored.
  bool exhaustive = false;
};

struct ProfileReport {
  ProblemSpec problem;
  Algorithm algorithm = Algorithm::max_scan;
  std::uint64_t trials = 0;
  BitsSummary measured_bits;
  BitsSummary comparisons;
  EntropyBits entropy_bound_bits;
  std::uint64_t classical_bound_ops = 0;
  std::optional<double> ratio_to_entropy_bound;  // mean / entropy bound, absent when the bound is 0
  std::uint64_t seed = 0;
  std::string rng;
  bool exhaustive = false;
  std::optional<RadixOptions> radix;
};

// Runs the algorithm on `trials` inputs drawn from independent seeded
// streams and aggregates the ledgers. Deterministic for a fixed seed and
// independent of the thread count. Throws DomainError when the algorithm does
// not solve p.kind or trials = 0.
ProfileReport profile(const ProblemSpec& p, Algorithm algorithm, std::uint64_t trials,
                      std::uint64_t seed, const ProfileOptions& options = {});

}  // namespace landauer
