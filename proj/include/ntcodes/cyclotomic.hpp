#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ntcodes/bigint.hpp"
#include "ntcodes/upoly.hpp"

namespace ntcodes {

/// The L-th cyclotomic polynomial. Built by dividing x^L - 1 by every Phi_d
/// with d | L, d < L; results are memoized process-wide.
const UPoly& cyclotomic_polynomial(std::int64_t order);

/// Element of the group ring Z[x]/(x^L - 1). Index j holds the coefficient of
/// zeta_L^j, where zeta_L = e(1/L). Arithmetic happens in the group ring;
/// reduction modulo Phi_L is deferred to equality tests and integer extraction.
class CycElement {
 public:
  /// Zero of order 1.
  CycElement();
  /// Constant c at order L.
  CycElement(std::int64_t order, const BigInt& c);

  /// zeta_L^(k mod L), i.e. e(k/L).
  static CycElement root(std::int64_t order, std::int64_t k);
  static CycElement from_coeffs(std::vector<BigInt> coeffs);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// True when every group-ring coefficient is zero. A nonzero representative
  /// may still vanish as a complex number; use equals_cyclotomic for that.
  bool is_zero() const;

  /// Adds c * zeta^k in place.
  void add_root(std::int64_t k, const BigInt& c = 1);

  /// Same complex value at order L2; L2 must be a multiple of order().
  CycElement embed(std::int64_t order2) const;

  /// Multiply by zeta^k (cyclic rotation).
  CycElement rotated(std::int64_t k) const;

  /// Representative reduced modulo Phi_L, degree < phi(L).
  UPoly reduced() const;

  /// The rational integer this element represents; NotAnInteger otherwise.
  BigInt to_integer() const;
  bool is_integer() const;

  bool equals_cyclotomic(const CycElement& other) const;

  CycElement& operator+=(const CycElement& b);
  CycElement& operator-=(const CycElement& b);
  CycElement& operator*=(const BigInt& k);
  CycElement operator-() const;

  friend CycElement operator+(CycElement a, const CycElement& b) { return a += b; }
  friend CycElement operator-(CycElement a, const CycElement& b) { return a -= b; }
  friend CycElement operator*(const CycElement& a, const CycElement& b);
  friend CycElement operator*(CycElement a, const BigInt& k) { return a *= k; }
  friend CycElement operator*(const BigInt& k, CycElement a) { return a *= k; }

  /// Exact representative equality in the group ring.
  bool operator==(const CycElement&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline bool is_zero(const CycElement& c) { return c.is_zero(); }

}  // namespace ntcodes
