#pragma once

#include <cstddef>
#include <vector>

#include "ntcodes/bigint.hpp"

namespace ntcodes {

/// Dense univariate integer polynomial, coefficient of x^i at index i.
/// Trailing zeros are trimmed, so the zero polynomial is an empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigInt> coeffs);

  static UPoly monomial(const BigInt& c, std::size_t degree);
  /// x^n - 1
  static UPoly x_pow_minus_one(std::size_t n);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly&) const = default;

  /// Quotient of a division that must leave no remainder; the divisor must be
  /// monic or the division must be exact over Z. Throws NonDivisible otherwise.
  UPoly divide_exact(const UPoly& divisor) const;

  /// Remainder modulo a monic divisor.
  UPoly remainder_monic(const UPoly& divisor) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace ntcodes
