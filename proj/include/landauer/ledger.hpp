#pragma once

#include <cstdint>
#include <variant>

namespace landauer {

// Events the ledger charges. A data comparison costs one bit, an assignment
// nothing, and bucket writes or erasures their width in bits.
struct Comparison {};
struct Assignment {};
struct BucketWrite {
  double bits;
};
struct Erasure {
  double bits;
};

using LedgerEvent = std::variant<Comparison, Assignment, BucketWrite, Erasure>;

// Running account of irreversible events during one algorithm run. All
// counters only grow; total_bits() = comparisons + bucket bits + erasure bits.
class EnergyLedger {
 public:
  // Throws DomainError for a negative or non-finite width.
  void charge(const LedgerEvent& event);
  void charge_comparison() noexcept { ++comparisons_; }
  void charge_assignment(std::uint64_t count = 1) noexcept { assignments_ += count; }

  // Functional form: a copy of this ledger with the event applied.
  EnergyLedger charged(const LedgerEvent& event) const;

  std::uint64_t comparisons() const noexcept { return comparisons_; }
  std::uint64_t assignments() const noexcept { return assignments_; }
  double bucket_bits_written() const noexcept { return bucket_bits_; }
  double erasure_bits() const noexcept { return erasure_bits_; }
  double total_bits() const noexcept {
    return static_cast<double>(comparisons_) + bucket_bits_ + erasure_bits_;
  }

  // Ledger of two consecutive phases.
  EnergyLedger& operator+=(const EnergyLedger& other) noexcept;
  friend EnergyLedger operator+(EnergyLedger a, const EnergyLedger& b) noexcept { return a += b; }

  friend bool operator==(const EnergyLedger&, const EnergyLedger&) = default;

 private:
  std::uint64_t comparisons_ = 0;
  std::uint64_t assignments_ = 0;
  double bucket_bits_ = 0.0;
  double erasure_bits_ = 0.0;
};

}  // namespace landauer
