#pragma once

#include <stdexcept>
#include <string>

namespace ntcodes {

/// Raised when brute-force enumeration would visit more words than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cyclotomic value that was expected to be a rational integer was not.
/// Every formula in this library produces integers by construction, so this
/// signals a bug rather than bad input.
class NotAnInteger : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact division left a remainder. Same bug-sentinel status as NotAnInteger.
class NonDivisible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Operands carry incompatible cyclotomic orders.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ntcodes
