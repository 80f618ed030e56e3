#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace landauer {

// Input that violates a type invariant (non-normalized distribution,
// dimension mismatch, out-of-range table entry).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's domain (W = 0, negative bits,
// unsupported problem kind for an operation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Algorithm precondition violated (unsorted search input, radix key overflow).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based; 0 when the error concerns the document as a whole.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State space too large for dense enumeration; the caller should use the
// analytic path instead.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace landauer
