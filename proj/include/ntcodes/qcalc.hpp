#pragma once

#include <cstdint>
#include <vector>

#include "ntcodes/bigint.hpp"
#include "ntcodes/multipoly.hpp"

namespace ntcodes::qcalc {

/// Symbol-count vector t = (t_0, ..., t_{r-1}); n is the sum of the parts.
class Composition {
 public:
  explicit Composition(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::uint32_t part(std::size_t i) const { return parts_[i]; }
  std::size_t length() const { return parts_.size(); }
  std::uint64_t total() const { return total_; }

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t total_ = 0;
};

/// Every composition of n into exactly r non-negative parts, in
/// lexicographic order of the parts.
std::vector<Composition> compositions(std::uint32_t n, std::uint32_t r);

/// [n]_q = 1 + q + ... + q^{n-1}
IntPoly q_integer(std::int64_t n);

/// Gaussian binomial [a+b choose a]_q, via the q-Pascal recurrence.
IntPoly q_binomial(std::uint32_t a, std::uint32_t b);

/// q-multinomial coefficient, as the telescoping product of q-binomials
/// prod_k [t_0+...+t_k choose t_k]_q.
IntPoly q_multinomial(const Composition& t);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt multinomial(const Composition& t);

/// Value of the q-multinomial at a primitive d-th root of unity, for d | n:
/// multinomial(t/d) when d divides every part, else 0.
BigInt q_multinomial_at_root(const Composition& t, std::int64_t d);

}  // namespace ntcodes::qcalc
