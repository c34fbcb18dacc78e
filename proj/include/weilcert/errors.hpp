#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weilcert {

/// Operands built over different fields (different D or cyclotomic order).
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inversion of zero, or of a zero divisor in a tower that is not a field.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value outside the domain an operation accepts (bad D, bad degree, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on input that does not meet its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Negative Pell equation a^2 - D b^2 = -1 has no integer solution.
class PellUnsolvable : public std::runtime_error {
 public:
  explicit PellUnsolvable(long d)
      : std::runtime_error("negative Pell equation unsolvable for D=" + std::to_string(d)), d_(d) {}
  long d() const noexcept { return d_; }

 private:
  long d_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weilcert
