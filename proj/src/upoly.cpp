#include "ntcodes/upoly.hpp"

#include <stdexcept>
#include <utility>

#include "ntcodes/errors.hpp"

namespace ntcodes {

UPoly::UPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt UPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::divide_exact(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("UPoly::divide_exact: division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw NonDivisible("UPoly::divide_exact: degree too small");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rem[k + dd], lead, q, r);
    if (!r.is_zero()) throw NonDivisible("UPoly::divide_exact: inexact leading division");
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  for (const auto& c : rem) {
    if (!c.is_zero()) throw NonDivisible("UPoly::divide_exact: nonzero remainder");
  }
  return UPoly(std::move(quot));
}

UPoly UPoly::remainder_monic(const UPoly& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw std::invalid_argument("UPoly::remainder_monic: divisor must be monic");
  }
  if (degree() < divisor.degree()) return *this;
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = rem.size() - dd; k-- > 0;) {
    const BigInt q = rem[k + dd];
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (!divisor.coeffs_[j].is_zero()) rem[k + j] -= q * divisor.coeffs_[j];
    }
  }
  rem.resize(dd);
  return UPoly(std::move(rem));
}

}  // namespace ntcodes
