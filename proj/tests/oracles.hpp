#pragma once

// Test-only reference computations. None of these call into the library's
// entropy, bound or algorithm code; they exist to produce expected values
// independently.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// -sum p log2 p, long double, plain loop.
inline long double entropy_bits(const std::vector<long double>& p) {
  long double h = 0;
  for (auto x : p) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

// Entropy of the output of `fn` over all 2^width inputs, uniform inputs,
// found by counting preimages.
template <typename Fn>
long double uniform_output_entropy(unsigned width, Fn fn) {
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::uint64_t total = std::uint64_t{1} << width;
  for (std::uint64_t x = 0; x < total; ++x) ++counts[fn(x)];
  std::vector<long double> p;
  for (const auto& [_, c] : counts) p.push_back(static_cast<long double>(c) / total);
  return entropy_bits(p);
}

// ceil(log2 x) for x >= 1 by repeated doubling.
inline std::uint64_t ceil_log2(std::uint64_t x) {
  std::uint64_t bits = 0;
  std::uint64_t reach = 1;
  while (reach < x) {
    reach *= 2;
    ++bits;
  }
  return bits;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Comparison counts of top-down merge sort (left half ceil(n/2)).
inline std::uint64_t merge_worst(std::uint64_t n) {
  return n < 2 ? 0 : merge_worst((n + 1) / 2) + merge_worst(n / 2) + n - 1;
}
inline std::uint64_t merge_best(std::uint64_t n) {
  return n < 2 ? 0 : merge_best((n + 1) / 2) + merge_best(n / 2) + n / 2;
}

// Unmetered comparison counter for merge sort on a copy of `v`.
inline std::uint64_t count_merge_comparisons(std::vector<std::uint64_t> v) {
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    self(self, lo, mid);
    self(self, mid, hi);
    std::vector<std::uint64_t> merged;
    std::size_t i = lo, j = mid;
    while (i < mid && j < hi) {
      ++count;
      merged.push_back(v[j] < v[i] ? v[j++] : v[i++]);
    }
    while (i < mid) merged.push_back(v[i++]);
    while (j < hi) merged.push_back(v[j++]);
    std::copy(merged.begin(), merged.end(), v.begin() + static_cast<std::ptrdiff_t>(lo));
  };
  rec(rec, 0, v.size());
  return count;
}

// Minimum worst-case number of pairwise comparisons that determines the
// answer, by game-tree search over the known partial order. `goal` is
// either "maximum known" or "total order known". Feasible for n <= 5.
class DecisionTreeDepth {
 public:
  enum class Goal { maximum, total_order };

  DecisionTreeDepth(unsigned n, Goal goal) : n_(n), goal_(goal) {}

  unsigned solve() {
    std::array<std::uint8_t, 8> above{};  // above[i]: elements known > i
    return depth(above);
  }

 private:
  unsigned n_;
  Goal goal_;
  std::map<std::uint64_t, unsigned> memo_;

  std::uint64_t key(const std::array<std::uint8_t, 8>& above) const {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(above[i]) << (8 * i);
    return k;
  }

  bool comparable(const std::array<std::uint8_t, 8>& above, unsigned i, unsigned j) const {
    return ((above[i] >> j) & 1u) || ((above[j] >> i) & 1u);
  }

  bool done(const std::array<std::uint8_t, 8>& above) const {
    if (goal_ == Goal::total_order) {
      for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = i + 1; j < n_; ++j)
          if (!comparable(above, i, j)) return false;
      return true;
    }
    for (unsigned m = 0; m < n_; ++m) {
      bool is_max = true;
      for (unsigned j = 0; j < n_ && is_max; ++j) {
        if (j != m && !((above[j] >> m) & 1u)) is_max = false;
      }
      if (is_max) return true;
    }
    return false;
  }

  // Adds lo < hi and closes transitively.
  std::array<std::uint8_t, 8> with(std::array<std::uint8_t, 8> above, unsigned lo,
                                   unsigned hi) const {
    const std::uint8_t up = static_cast<std::uint8_t>(above[hi] | (1u << hi));
    for (unsigned k = 0; k < n_; ++k) {
      if (k == lo || ((above[k] >> lo) & 1u)) above[k] |= up;
    }
    return above;
  }

  unsigned depth(const std::array<std::uint8_t, 8>& above) {
    if (done(above)) return 0;
    const auto k = key(above);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    unsigned best = ~0u;
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = i + 1; j < n_; ++j) {
        if (comparable(above, i, j)) continue;
        const unsigned worst = 1 + std::max(depth(with(above, i, j)), depth(with(above, j, i)));
        best = std::min(best, worst);
      }
    }
    memo_.emplace(k, best);
    return best;
  }
};

}  // namespace oracle
