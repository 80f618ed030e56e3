#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "landauer/bounds.hpp"
#include "landauer/errors.hpp"
#include "oracles.hpp"

using namespace landauer;

namespace {

// ceil(log2 f) by exact big-integer arithmetic.
std::uint64_t big_ceil_log2(const boost::multiprecision::cpp_int& f) {
  if (f == 1) return 0;
  const auto msb = static_cast<std::uint64_t>(boost::multiprecision::msb(f));
  const bool power_of_two = (f & (f - 1)) == 0;
  return power_of_two ? msb : msb + 1;
}

}  // namespace

TEST(BoundBits, Examples) {
  EXPECT_EQ(bound_bits(ProblemSpec::sort(1024)).bits(), 10240.0);
  EXPECT_EQ(bound_bits(ProblemSpec::ordered_search(1024)).bits(), 10.0);
  EXPECT_EQ(bound_bits(ProblemSpec::max_of_n(16)).bits(), 16.0);
  EXPECT_EQ(bound_bits(ProblemSpec::matmul(4, 8)).bits(), 288.0);
  EXPECT_EQ(bound_bits(ProblemSpec::add(5)).bits(), 6.0);
  EXPECT_EQ(bound_bits(ProblemSpec::mul(5)).bits(), 10.0);
  EXPECT_EQ(bound_bits(ProblemSpec::compare(64)).bits(), 1.0);
  EXPECT_THROW(bound_bits(ProblemSpec::sort(0)), ValidationError);
  EXPECT_THROW(bound_bits(ProblemSpec::matmul(0, 3)), ValidationError);
}

TEST(BoundBits, StrictlyMonotone) {
  for (std::uint64_t n = 1; n < 2000; ++n) {
    EXPECT_LT(bound_bits(ProblemSpec::max_of_n(n)).bits(), bound_bits(ProblemSpec::max_of_n(n + 1)).bits());
    EXPECT_LT(bound_bits(ProblemSpec::sort(n)).bits(), bound_bits(ProblemSpec::sort(n + 1)).bits());
    EXPECT_LT(bound_bits(ProblemSpec::ordered_search(n)).bits(),
              bound_bits(ProblemSpec::ordered_search(n + 1)).bits());
  }
  for (std::uint32_t n = 1; n < 64; ++n) {
    for (std::uint32_t m = 1; m < 16; ++m) {
      const double b = bound_bits(ProblemSpec::matmul(n, m)).bits();
      EXPECT_LT(b, bound_bits(ProblemSpec::matmul(n + 1, m)).bits());
      EXPECT_LT(b, bound_bits(ProblemSpec::matmul(n, m + 1)).bits());
    }
    EXPECT_LT(bound_bits(ProblemSpec::add(n)).bits(), bound_bits(ProblemSpec::add(n + 1)).bits());
    EXPECT_LT(bound_bits(ProblemSpec::mul(n)).bits(), bound_bits(ProblemSpec::mul(n + 1)).bits());
  }
}

TEST(EncodingEntropy, Examples) {
  const auto mx = encoding_entropy(ProblemSpec::max_of_n(8, 4));
  EXPECT_EQ(mx.s1.bits(), 40.0);
  EXPECT_EQ(mx.s2.bits(), 32.0);
  const auto so = encoding_entropy(ProblemSpec::sort(4, 4));
  EXPECT_EQ(so.s1.bits(), 24.0);
  EXPECT_EQ(so.s2.bits(), 16.0);
  const auto se = encoding_entropy(ProblemSpec::ordered_search(4, 4));
  EXPECT_EQ(se.s1.bits(), 22.0);
  EXPECT_EQ(se.s2.bits(), 20.0);
  EXPECT_THROW(encoding_entropy(ProblemSpec::matmul(2, 2)), DomainError);
}

TEST(EncodingEntropy, DifferenceIsTheBound) {
  for (std::uint64_t n = 2; n <= 1024; n *= 2) {
    for (std::uint32_t m : {1u, 4u, 8u}) {
      for (const auto& p : {ProblemSpec::max_of_n(n, m), ProblemSpec::sort(n, m),
                            ProblemSpec::ordered_search(n, m)}) {
        const auto e = encoding_entropy(p);
        EXPECT_EQ(e.s1.bits() - e.s2.bits(), bound_bits(p).bits()) << to_string(p.kind) << " N=" << n;
        EXPECT_GE(e.layout.prefix_bits, 0.0);
        EXPECT_GE(e.layout.suffix_bits, 0.0);
        EXPECT_EQ(e.s1.bits(), e.layout.prefix_bits + e.layout.suffix_bits);
        // Prefix of N M-bit elements is log2 of 2^(NM) states.
        EXPECT_EQ(e.layout.prefix_bits >= static_cast<double>(n * m), true);
      }
    }
  }
}

TEST(TimeLowerBound, Examples) {
  EXPECT_EQ(time_lower_bound_steps(ProblemSpec::max_of_n(100)), 100.0);
  EXPECT_EQ(time_lower_bound_steps(ProblemSpec::sort(8)), 24.0);
  EXPECT_EQ(time_lower_bound_steps(ProblemSpec::ordered_search(8)), 3.0);
  EXPECT_THROW(time_lower_bound_steps(ProblemSpec::add(3)), DomainError);
  const BoundReport r = bound_report(ProblemSpec::sort(64));
  ASSERT_TRUE(r.time_steps_lower);
  EXPECT_EQ(*r.time_steps_lower, r.entropy_bound_bits.bits());
}

TEST(ClassicalBound, Examples) {
  // 2^15 = 32768 < 8! = 40320 <= 65536 = 2^16.
  EXPECT_EQ(oracle::factorial(8), 40320u);
  EXPECT_EQ(oracle::ceil_log2(40320), 16u);
  EXPECT_EQ(classical_comparison_bound(ProblemSpec::sort(8)), 16u);
  EXPECT_EQ(classical_comparison_bound(ProblemSpec::max_of_n(8)), 7u);
  EXPECT_EQ(classical_comparison_bound(ProblemSpec::ordered_search(1)), 1u);
  EXPECT_EQ(classical_comparison_bound(ProblemSpec::ordered_search(1024)), 11u);
  EXPECT_THROW(classical_comparison_bound(ProblemSpec::mul(2)), DomainError);
}

// Optimal worst-case comparison counts found by game-tree search.
TEST(ClassicalBound, MatchesDecisionTreeSearch) {
  using Goal = oracle::DecisionTreeDepth::Goal;
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(oracle::DecisionTreeDepth(n, Goal::maximum).solve(),
              classical_comparison_bound(ProblemSpec::max_of_n(n)))
        << "N=" << n;
    EXPECT_EQ(oracle::DecisionTreeDepth(n, Goal::total_order).solve(),
              classical_comparison_bound(ProblemSpec::sort(n)))
        << "N=" << n;
  }
}

TEST(ClassicalBound, CeilLog2FactorialMatchesBigInt) {
  boost::multiprecision::cpp_int f = 1;
  for (unsigned n = 0; n <= 3000; ++n) {
    if (n > 1) f *= n;
    ASSERT_EQ(ceil_log2_factorial(n), big_ceil_log2(f)) << "n=" << n;
  }
  EXPECT_EQ(ceil_log2_factorial(256), 1684u);
}

TEST(ClassicalBound, BelowEntropyBoundAndConverging) {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const auto p = ProblemSpec::sort(n);
    EXPECT_LE(static_cast<double>(classical_comparison_bound(p)), bound_bits(p).bits() + 1e-9) << n;
  }
  const auto big = ProblemSpec::sort(std::uint64_t{1} << 20);
  EXPECT_GE(static_cast<double>(classical_comparison_bound(big)) / bound_bits(big).bits(), 0.8);
  double prev = 0;
  for (unsigned e = 4; e <= 24; e += 4) {
    const auto p = ProblemSpec::sort(std::uint64_t{1} << e);
    const double ratio = static_cast<double>(classical_comparison_bound(p)) / bound_bits(p).bits();
    EXPECT_GT(ratio, prev);
    prev = ratio;
  }
}

TEST(Grover, Ratio) {
  EXPECT_EQ(grover_energy_ratio(100), 10.0);
  EXPECT_EQ(grover_energy_ratio(1), 1.0);
  EXPECT_EQ(grover_energy_ratio(std::uint64_t{1} << 20), 1024.0);
  EXPECT_THROW(grover_energy_ratio(0), DomainError);
}

TEST(BoundReport, OnlySearchFamilyHasClassicalFields) {
  const BoundReport mm = bound_report(ProblemSpec::matmul(4, 8));
  EXPECT_FALSE(mm.classical_bound_ops);
  EXPECT_FALSE(mm.encoding);
  const BoundReport s = bound_report(ProblemSpec::sort(1024));
  EXPECT_EQ(s.classical_bound_ops, 8770u);
  ASSERT_TRUE(s.encoding);
}
