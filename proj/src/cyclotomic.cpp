#include "ntcodes/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "ntcodes/errors.hpp"
#include "ntcodes/numtheory.hpp"

namespace ntcodes {

namespace {

std::size_t checked_order(std::int64_t order) {
  if (order <= 0) {
    throw std::invalid_argument("cyclotomic order must be positive, got " + std::to_string(order));
  }
  return static_cast<std::size_t>(order);
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

// std::map never relocates nodes, so references handed out stay valid.
std::map<std::int64_t, UPoly>& phi_table() {
  static std::map<std::int64_t, UPoly> table;
  return table;
}

}  // namespace

const UPoly& cyclotomic_polynomial(std::int64_t order) {
  checked_order(order);
  {
    std::lock_guard lock(phi_mutex());
    auto it = phi_table().find(order);
    if (it != phi_table().end()) return it->second;
  }
  UPoly divisor(std::vector<BigInt>{1});
  for (std::int64_t d : numtheory::divisors(order)) {
    if (d == order) break;
    divisor = divisor * cyclotomic_polynomial(d);
  }
  UPoly phi = UPoly::x_pow_minus_one(static_cast<std::size_t>(order)).divide_exact(divisor);
  std::lock_guard lock(phi_mutex());
  return phi_table().try_emplace(order, std::move(phi)).first->second;
}

CycElement::CycElement() : coeffs_(1) {}

CycElement::CycElement(std::int64_t order, const BigInt& c) : coeffs_(checked_order(order)) {
  coeffs_[0] = c;
}

CycElement CycElement::root(std::int64_t order, std::int64_t k) {
  CycElement e(order, 0);
  e.coeffs_[static_cast<std::size_t>(numtheory::mod(k, order))] = 1;
  return e;
}

CycElement CycElement::from_coeffs(std::vector<BigInt> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("CycElement: empty coefficient vector");
  CycElement e;
  e.coeffs_ = std::move(coeffs);
  return e;
}

bool CycElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void CycElement::add_root(std::int64_t k, const BigInt& c) {
  coeffs_[static_cast<std::size_t>(numtheory::mod(k, order()))] += c;
}

CycElement CycElement::embed(std::int64_t order2) const {
  checked_order(order2);
  if (order2 % order() != 0) {
    throw OrderMismatch("CycElement::embed: " + std::to_string(order2) +
                        " is not a multiple of " + std::to_string(order()));
  }
  const std::size_t stride = static_cast<std::size_t>(order2 / order());
  CycElement e(order2, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) e.coeffs_[j * stride] = coeffs_[j];
  return e;
}

CycElement CycElement::rotated(std::int64_t k) const {
  const std::size_t len = coeffs_.size();
  const std::size_t shift = static_cast<std::size_t>(numtheory::mod(k, order()));
  CycElement e(order(), 0);
  for (std::size_t j = 0; j < len; ++j) e.coeffs_[(j + shift) % len] = coeffs_[j];
  return e;
}

UPoly CycElement::reduced() const {
  return UPoly(coeffs_).remainder_monic(cyclotomic_polynomial(order()));
}

bool CycElement::is_integer() const { return reduced().degree() <= 0; }

BigInt CycElement::to_integer() const {
  const UPoly r = reduced();
  if (r.degree() > 0) {
    throw NotAnInteger("cyclotomic element of order " + std::to_string(order()) +
                       " does not reduce to a rational integer");
  }
  return r.coeff(0);
}

bool CycElement::equals_cyclotomic(const CycElement& other) const {
  const std::int64_t common = numtheory::lcm(order(), other.order());
  return (embed(common) - other.embed(common)).reduced().is_zero();
}

CycElement& CycElement::operator+=(const CycElement& b) {
  if (b.order() != order()) throw OrderMismatch("CycElement: order mismatch in addition");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  return *this;
}

CycElement& CycElement::operator-=(const CycElement& b) {
  if (b.order() != order()) throw OrderMismatch("CycElement: order mismatch in subtraction");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= b.coeffs_[j];
  return *this;
}

CycElement& CycElement::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CycElement CycElement::operator-() const {
  CycElement e = *this;
  for (auto& c : e.coeffs_) c = -c;
  return e;
}

namespace {

// Index of the only nonzero coefficient, or -1.
long single_support(const std::vector<BigInt>& c) {
  long found = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (found >= 0) return -1;
    found = static_cast<long>(i);
  }
  return found;
}

}  // namespace

CycElement operator*(const CycElement& a, const CycElement& b) {
  if (a.order() != b.order()) throw OrderMismatch("CycElement: order mismatch in product");
  const std::size_t len = a.coeffs_.size();
  if (const long i = single_support(a.coeffs_); i >= 0) {
    return b.rotated(i) * a.coeffs_[static_cast<std::size_t>(i)];
  }
  if (const long j = single_support(b.coeffs_); j >= 0) {
    return a.rotated(j) * b.coeffs_[static_cast<std::size_t>(j)];
  }
  CycElement e(a.order(), 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      e.coeffs_[(i + j) % len] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return e;
}

}  // namespace ntcodes
