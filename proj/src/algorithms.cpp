#include "landauer/algorithms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>

#include "landauer/errors.hpp"
#include "landauer/kernels.hpp"
#include "landauer/rng.hpp"

namespace landauer {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithmNames{{
    {Algorithm::max_scan, "max_scan"},
    {Algorithm::bubble_sort, "bubble_sort"},
    {Algorithm::merge_sort, "merge_sort"},
    {Algorithm::binary_search, "binary_search"},
    {Algorithm::radix_sort, "radix_sort"},
}};

constexpr std::array<std::pair<std::string_view, Algorithm>, 5> kShortNames{{
    {"max", Algorithm::max_scan},
    {"bubble", Algorithm::bubble_sort},
    {"merge", Algorithm::merge_sort},
    {"binary", Algorithm::binary_search},
    {"radix", Algorithm::radix_sort},
}};

// Ledger-charging "a > b".
bool greater(Value a, Value b, EnergyLedger& ledger) {
  ledger.charge_comparison();
  return a > b;
}

void merge_sort_rec(std::span<Value> values, std::span<Value> scratch, EnergyLedger& ledger) {
  const std::size_t n = values.size();
  if (n < 2) return;
  const std::size_t left_size = (n + 1) / 2;
  auto left = values.first(left_size);
  auto right = values.subspan(left_size);
  merge_sort_rec(left, scratch.first(left_size), ledger);
  merge_sort_rec(right, scratch.subspan(left_size), ledger);

  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  while (i < left.size() && j < right.size()) {
    scratch[k++] = greater(left[i], right[j], ledger) ? right[j++] : left[i++];
  }
  while (i < left.size()) scratch[k++] = left[i++];
  while (j < right.size()) scratch[k++] = right[j++];
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n), values.begin());
  // n writes into scratch and n back.
  ledger.charge_assignment(2 * n);
}

// B^d, saturating at 2^64.
std::optional<std::uint64_t> key_limit(std::uint64_t buckets, unsigned passes) {
  std::uint64_t limit = 1;
  for (unsigned p = 0; p < passes; ++p) {
    if (limit > std::numeric_limits<std::uint64_t>::max() / buckets) return std::nullopt;
    limit *= buckets;
  }
  return limit;
}

void check_radix_options(const RadixOptions& options) {
  if (options.buckets < 2) throw PreconditionError("radix sort needs at least 2 buckets");
  if (options.passes == 0) throw PreconditionError("radix sort needs at least one digit pass");
}

std::uint64_t value_mask(std::uint32_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

RadixOptions default_radix(std::uint64_t count, unsigned key_bits) {
  const unsigned bucket_bits = std::max(1u, static_cast<unsigned>(std::bit_width(count - 1)));
  const unsigned b = std::min(bucket_bits, 16u);
  const unsigned passes = std::max(1u, (key_bits + b - 1) / b);
  return RadixOptions{std::uint64_t{1} << b, passes, false};
}

struct TrialCost {
  double bits = 0.0;
  double comparisons = 0.0;
};

TrialCost cost_of(const EnergyLedger& ledger) {
  return {ledger.total_bits(), static_cast<double>(ledger.comparisons())};
}

// Runs without precondition checks; the caller guarantees valid input.
EnergyLedger run_unchecked(Algorithm algorithm, std::vector<Value>& values, Value key,
                           const RadixOptions& radix) {
  EnergyLedger ledger;
  switch (algorithm) {
    case Algorithm::max_scan: max_scan(values, ledger); break;
    case Algorithm::bubble_sort: bubble_sort(values, ledger); break;
    case Algorithm::merge_sort: merge_sort(values, ledger); break;
    case Algorithm::binary_search: binary_search(values, key, ledger); break;
    case Algorithm::radix_sort: radix_sort(values, radix, ledger); break;
  }
  return ledger;
}

}  // namespace

std::string_view to_string(Algorithm a) {
  for (const auto& [k, name] : kAlgorithmNames) {
    if (k == a) return name;
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  for (const auto& [k, n] : kAlgorithmNames) {
    if (n == name) return k;
  }
  for (const auto& [n, k] : kShortNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown algorithm '" + std::string(name) + "'");
}

bool is_comparison_algorithm(Algorithm a) { return a != Algorithm::radix_sort; }

ProblemKind problem_of(Algorithm a) {
  switch (a) {
    case Algorithm::max_scan: return ProblemKind::MaxOfN;
    case Algorithm::bubble_sort:
    case Algorithm::merge_sort:
    case Algorithm::radix_sort: return ProblemKind::Sort;
    case Algorithm::binary_search: return ProblemKind::OrderedSearch;
  }
  throw DomainError("unknown algorithm");
}

std::size_t max_scan(std::span<const Value> values, EnergyLedger& ledger) {
  if (values.empty()) throw PreconditionError("max_scan needs a nonempty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (greater(values[i], values[best], ledger)) {
      best = i;
      ledger.charge_assignment();
    }
  }
  return best;
}

void bubble_sort(std::span<Value> values, EnergyLedger& ledger) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (greater(values[i], values[j], ledger)) {
        // temp = x[i]; x[i] = x[j]; x[j] = temp;
        std::swap(values[i], values[j]);
        ledger.charge_assignment(3);
      }
    }
  }
}

void merge_sort(std::span<Value> values, EnergyLedger& ledger) {
  std::vector<Value> scratch(values.size());
  merge_sort_rec(values, scratch, ledger);
}

std::optional<std::size_t> binary_search(std::span<const Value> sorted, Value key,
                                         EnergyLedger& ledger) {
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw PreconditionError("binary_search input is not sorted ascending");
  }
  std::size_t lo = 0;
  std::size_t hi = sorted.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ledger.charge_comparison();
    if (key < sorted[mid]) {
      hi = mid;
    } else if (sorted[mid] < key) {
      lo = mid + 1;
    } else {
      return mid;
    }
  }
  return std::nullopt;
}

unsigned radix_slot_bits(std::uint64_t buckets) {
  return buckets <= 1 ? 0u : static_cast<unsigned>(std::bit_width(buckets - 1));
}

void radix_sort(std::span<Value> values, const RadixOptions& options, EnergyLedger& ledger) {
  check_radix_options(options);
  if (const auto limit = key_limit(options.buckets, options.passes)) {
    for (Value v : values) {
      if (v >= *limit) {
        throw PreconditionError("key " + std::to_string(v) + " needs more than " +
                                std::to_string(options.passes) + " base-" +
                                std::to_string(options.buckets) + " digits");
      }
    }
  }
  const double slot_bits = radix_slot_bits(options.buckets);
  const std::size_t n = values.size();
  std::vector<std::size_t> counts(options.buckets);
  std::vector<Value> out(n);
  std::uint64_t place = 1;
  for (unsigned pass = 0; pass < options.passes; ++pass) {
    if (pass > 0 && options.charge_bucket_clearing) {
      ledger.charge(Erasure{slot_bits * static_cast<double>(n)});
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (Value v : values) ++counts[(v / place) % options.buckets];
    std::size_t start = 0;
    for (auto& c : counts) {
      const std::size_t next = start + c;
      c = start;
      start = next;
    }
    for (Value v : values) {
      out[counts[(v / place) % options.buckets]++] = v;
      ledger.charge(BucketWrite{slot_bits});
    }
    std::copy(out.begin(), out.end(), values.begin());
    ledger.charge_assignment(n);
    if (pass + 1 < options.passes) place *= options.buckets;
  }
}

RunResult run_algorithm(Algorithm algorithm, const AlgorithmInput& input, EnergyLedger ledger) {
  if (input.values.empty()) throw PreconditionError("algorithm input is empty");
  switch (algorithm) {
    case Algorithm::max_scan: {
      const std::size_t index = max_scan(input.values, ledger);
      return {MaxIndex{index}, ledger};
    }
    case Algorithm::bubble_sort:
    case Algorithm::merge_sort:
    case Algorithm::radix_sort: {
      std::vector<Value> values = input.values;
      if (algorithm == Algorithm::bubble_sort) {
        bubble_sort(values, ledger);
      } else if (algorithm == Algorithm::merge_sort) {
        merge_sort(values, ledger);
      } else {
        radix_sort(values, input.radix, ledger);
      }
      return {SortedValues{std::move(values)}, ledger};
    }
    case Algorithm::binary_search: {
      const auto position = binary_search(input.values, input.key, ledger);
      return {SearchOutcome{position}, ledger};
    }
  }
  throw DomainError("unknown algorithm");
}

std::uint64_t merge_sort_worst_comparisons(std::uint64_t n) {
  // Memoised over the O(log n) distinct sizes the recursion reaches.
  static thread_local std::map<std::uint64_t, std::uint64_t> memo;
  if (n < 2) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const std::uint64_t c =
      merge_sort_worst_comparisons((n + 1) / 2) + merge_sort_worst_comparisons(n / 2) + n - 1;
  memo.emplace(n, c);
  return c;
}

std::uint64_t merge_sort_best_comparisons(std::uint64_t n) {
  static thread_local std::map<std::uint64_t, std::uint64_t> memo;
  if (n < 2) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const std::uint64_t c =
      merge_sort_best_comparisons((n + 1) / 2) + merge_sort_best_comparisons(n / 2) + n / 2;
  memo.emplace(n, c);
  return c;
}

namespace {

// Places sorted[0..n) so that each merge sees perfectly interleaved runs:
// even ranks go left (ceil(n/2) of them), odd ranks go right.
void build_worst_case(std::span<const Value> sorted, std::span<Value> out) {
  const std::size_t n = sorted.size();
  if (n < 2) {
    if (n == 1) out[0] = sorted[0];
    return;
  }
  std::vector<Value> evens;
  std::vector<Value> odds;
  evens.reserve((n + 1) / 2);
  odds.reserve(n / 2);
  for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? evens : odds).push_back(sorted[i]);
  build_worst_case(evens, out.first(evens.size()));
  build_worst_case(odds, out.subspan(evens.size()));
}

}  // namespace

std::vector<Value> merge_sort_worst_case_input(std::size_t n) {
  std::vector<Value> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = i;
  std::vector<Value> out(n);
  build_worst_case(sorted, out);
  return out;
}

ProfileReport profile(const ProblemSpec& p, Algorithm algorithm, std::uint64_t trials,
                      std::uint64_t seed, const ProfileOptions& options) {
  p.validate();
  if (problem_of(algorithm) != p.kind) {
    throw DomainError(std::string(to_string(algorithm)) + " does not solve the " +
                      std::string(to_string(p.kind)) + " problem");
  }
  if (!options.exhaustive && trials == 0) throw DomainError("profile needs at least one trial");
  if (p.N > (std::uint64_t{1} << 32)) throw DomainError("profile input larger than 2^32 elements");

  const std::size_t n = p.N;
  ProfileReport report;
  report.problem = p;
  report.algorithm = algorithm;
  report.seed = seed;
  report.rng = std::string(kRngAlgorithm);
  report.exhaustive = options.exhaustive;

  std::optional<RadixOptions> radix;
  if (algorithm == Algorithm::radix_sort) {
    const unsigned key_bits =
        options.exhaustive ? std::max(1u, static_cast<unsigned>(std::bit_width(n - 1))) : p.M;
    radix = options.radix.value_or(default_radix(n, key_bits));
    check_radix_options(*radix);
    const auto limit = key_limit(radix->buckets, radix->passes);
    const std::uint64_t max_key = options.exhaustive ? n - 1 : value_mask(key_bits);
    if (limit && max_key >= *limit) {
      throw PreconditionError("radix configuration cannot represent " + std::to_string(key_bits) +
                              "-bit keys");
    }
    report.radix = radix;
  }
  const RadixOptions radix_opts = radix.value_or(RadixOptions{});

  std::vector<TrialCost> costs;
  if (options.exhaustive) {
    if (p.kind == ProblemKind::OrderedSearch) {
      // Odd values 1, 3, ..., 2N-1; keys 0..2N hit every element and every gap.
      std::vector<Value> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = 2 * i + 1;
      costs = kernels::parallel::over_trials(2 * n + 1, [&](std::uint64_t key) {
        std::vector<Value> v = values;
        return cost_of(run_unchecked(algorithm, v, key, radix_opts));
      });
    } else {
      if (n > 10) throw DomainError("exhaustive profiling enumerates N! inputs; N must be <= 10");
      costs = kernels::parallel::over_permutations(
          static_cast<unsigned>(n), [&](std::span<const std::uint32_t> perm) {
            std::vector<Value> v(perm.begin(), perm.end());
            return cost_of(run_unchecked(algorithm, v, 0, radix_opts));
          });
    }
  } else {
    const std::uint64_t mask = value_mask(p.M);
    costs = kernels::parallel::over_trials(trials, [&](std::uint64_t trial) {
      Rng rng(stream_seed(seed, trial));
      std::vector<Value> v(n);
      for (auto& x : v) x = rng.next() & mask;
      Value key = 0;
      if (algorithm == Algorithm::binary_search) {
        std::sort(v.begin(), v.end());
        // Half the keys are present, half are random (usually absent).
        key = (rng.next() & 1) ? v[rng.below(n)] : (rng.next() & mask);
      }
      return cost_of(run_unchecked(algorithm, v, key, radix_opts));
    });
  }

  report.trials = costs.size();
  BitsSummary bits{std::numeric_limits<double>::infinity(), 0.0,
                   -std::numeric_limits<double>::infinity()};
  BitsSummary comps = bits;
  double bit_sum = 0.0;
  double comp_sum = 0.0;
  for (const auto& c : costs) {
    bits.min = std::min(bits.min, c.bits);
    bits.max = std::max(bits.max, c.bits);
    comps.min = std::min(comps.min, c.comparisons);
    comps.max = std::max(comps.max, c.comparisons);
    bit_sum += c.bits;
    comp_sum += c.comparisons;
  }
  bits.mean = bit_sum / static_cast<double>(costs.size());
  comps.mean = comp_sum / static_cast<double>(costs.size());
  report.measured_bits = bits;
  report.comparisons = comps;

  report.entropy_bound_bits = bound_bits(p);
  report.classical_bound_ops = classical_comparison_bound(p);
  if (report.entropy_bound_bits.bits() > 0.0) {
    report.ratio_to_entropy_bound = bits.mean / report.entropy_bound_bits.bits();
  }
  return report;
}

}  // namespace landauer
