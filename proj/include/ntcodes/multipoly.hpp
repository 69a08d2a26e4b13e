#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ntcodes/bigint.hpp"

namespace ntcodes {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Canonical variable order: z-variables, then w-variables, then q, then any
/// other name. Within a family the bare name sorts first, then numeric
/// suffixes ascending (z1 < z2 < z10).
bool variable_less(const std::string& a, const std::string& b);

/// Term order used for storage and printing: total degree ascending, ties
/// broken by descending lexicographic exponent order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

inline Exponent checked_exponent_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("MultiPoly: exponent overflow");
  }
  return a + b;
}

inline Exponent checked_exponent_mul(Exponent a, std::uint64_t k) {
  const std::uint64_t v = static_cast<std::uint64_t>(a) * k;
  if (k != 0 && v / k != a) throw std::overflow_error("MultiPoly: exponent overflow");
  if (v > std::numeric_limits<Exponent>::max()) throw std::overflow_error("MultiPoly: exponent overflow");
  return static_cast<Exponent>(v);
}

/// Sorted, de-duplicated union of two canonical variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Sparse multivariate polynomial with exact coefficients. `Coeff` is BigInt or
/// CycElement; it needs +, -, *, unary -, and a free is_zero().
template <class Coeff>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  MultiPoly() = default;

  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end(), variable_less);
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  }

  static MultiPoly constant(const Coeff& c, std::vector<std::string> variables = {}) {
    MultiPoly p(std::move(variables));
    p.add_term(Monomial(p.vars_.size(), 0), c);
    return p;
  }

  /// `one * name`
  static MultiPoly variable(const std::string& name, const Coeff& one) {
    MultiPoly p(std::vector<std::string>{name});
    p.add_term(Monomial{1}, one);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::ptrdiff_t variable_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : it - vars_.begin();
  }

  /// Accumulates c * monomial; zero results are erased.
  void add_term(const Monomial& m, const Coeff& c) {
    if (m.size() != vars_.size()) {
      throw std::invalid_argument("MultiPoly: exponent vector length does not match variables");
    }
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// Pointer to the stored coefficient, or nullptr for an absent term.
  const Coeff* find(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Same polynomial over a superset of variables.
  MultiPoly with_variables(const std::vector<std::string>& target) const {
    MultiPoly out(target);
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto idx = out.variable_index(vars_[i]);
      if (idx < 0) throw std::invalid_argument("MultiPoly: variable '" + vars_[i] + "' dropped");
      where[i] = static_cast<std::size_t>(idx);
    }
    for (const auto& [m, c] : terms_) {
      Monomial e(out.vars_.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) e[where[i]] = m[i];
      out.terms_.emplace(std::move(e), c);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    MultiPoly out = a.with_variables(vars);
    for (const auto& [m, c] : b.with_variables(vars).terms_) out.add_term(m, c);
    return out;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    const MultiPoly x = a.with_variables(vars);
    const MultiPoly y = b.with_variables(vars);
    MultiPoly out(vars);
    Monomial e(vars.size());
    for (const auto& [ma, ca] : x.terms_) {
      for (const auto& [mb, cb] : y.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_exponent_add(ma[i], mb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  template <class Scalar>
  MultiPoly scaled(const Scalar& k) const {
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * k);
    return out;
  }

  /// p^k by repeated squaring; p^0 is the constant `one`.
  MultiPoly pow(std::uint64_t k, const Coeff& one) const {
    MultiPoly result = constant(one, vars_);
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Replace `name` by a scalar value; the variable is removed.
  template <class Scalar>
  MultiPoly substitute(const std::string& name, const Scalar& value) const {
    const auto idx = variable_index(name);
    if (idx < 0) return *this;
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + idx);
    MultiPoly out(rest);
    std::map<Exponent, Scalar> powers;
    for (const auto& [m, c] : terms_) {
      Monomial e = m;
      const Exponent k = e[static_cast<std::size_t>(idx)];
      e.erase(e.begin() + idx);
      if (k == 0) {
        out.add_term(e, c);
      } else {
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, scalar_pow(value, k)).first;
        out.add_term(e, c * it->second);
      }
    }
    return out;
  }

  /// Replace `name` by a polynomial; `one` is the multiplicative identity.
  MultiPoly substitute_poly(const std::string& name, const MultiPoly& value, const Coeff& one) const {
    const auto idx = variable_index(name);
    if (idx < 0) return *this;
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + idx);
    std::map<Exponent, MultiPoly> groups;
    for (const auto& [m, c] : terms_) {
      Monomial e = m;
      const Exponent k = e[static_cast<std::size_t>(idx)];
      e.erase(e.begin() + idx);
      auto it = groups.try_emplace(k, MultiPoly(rest)).first;
      it->second.add_term(e, c);
    }
    MultiPoly out(merge_variables(rest, value.vars_));
    MultiPoly power = constant(one, value.vars_);
    Exponent have = 0;
    for (const auto& [k, group] : groups) {
      if (k > have) {
        power = power * value.pow(k - have, one);
        have = k;
      }
      out += group * power;
    }
    return out;
  }

  /// Applies f to every coefficient, producing a polynomial over another ring.
  template <class F>
  auto map_coefficients(F f) const -> MultiPoly<decltype(f(std::declval<const Coeff&>()))> {
    MultiPoly<decltype(f(std::declval<const Coeff&>()))> out(vars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  /// Structural equality after aligning variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
  }

 private:
  static bool is_zero_coeff(const Coeff& c) {
    using ntcodes::is_zero;
    return is_zero(c);
  }

  template <class Scalar>
  static Scalar scalar_pow(const Scalar& v, Exponent k) {
    Scalar result = v;
    Scalar base = v;
    --k;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

using IntPoly = MultiPoly<BigInt>;

/// Sum of all coefficients (evaluation at the all-ones point).
BigInt evaluate_at_ones(const IntPoly& p);

/// Coefficient-wise exact division; NonDivisible if any remainder appears.
IntPoly divide_exact(const IntPoly& p, const BigInt& k);

/// Canonical text: terms in storage order joined by " + " (negative terms use
/// " - "), each "c*v1^e1*v2^e2" with unit coefficients, zero exponents and
/// "^1" omitted. The zero polynomial prints "0".
std::string to_text(const IntPoly& p);

/// Inverse of to_text. Variables are the names that occur in the text.
IntPoly parse_poly(const std::string& text);

}  // namespace ntcodes
