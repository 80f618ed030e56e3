#include "landauer/ledger.hpp"

#include <cmath>
#include <string>

#include "landauer/errors.hpp"

namespace landauer {

namespace {

double checked_width(double bits) {
  if (!std::isfinite(bits) || bits < 0.0) {
    throw DomainError("event width must be a nonnegative number of bits, got " +
                      std::to_string(bits));
  }
  return bits;
}

}  // namespace

void EnergyLedger::charge(const LedgerEvent& event) {
  struct Visitor {
    EnergyLedger& ledger;
    void operator()(Comparison) const { ++ledger.comparisons_; }
    void operator()(Assignment) const { ++ledger.assignments_; }
    void operator()(BucketWrite w) const { ledger.bucket_bits_ += checked_width(w.bits); }
    void operator()(Erasure e) const { ledger.erasure_bits_ += checked_width(e.bits); }
  };
  std::visit(Visitor{*this}, event);
}

EnergyLedger EnergyLedger::charged(const LedgerEvent& event) const {
  EnergyLedger copy = *this;
  copy.charge(event);
  return copy;
}

EnergyLedger& EnergyLedger::operator+=(const EnergyLedger& other) noexcept {
  comparisons_ += other.comparisons_;
  assignments_ += other.assignments_;
  bucket_bits_ += other.bucket_bits_;
  erasure_bits_ += other.erasure_bits_;
  return *this;
}

}  // namespace landauer
