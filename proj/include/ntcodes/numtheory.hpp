#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ntcodes::numtheory {

/// Prime-power factorization, primes strictly ascending, exponents >= 1.
struct Factorization {
  std::vector<std::pair<std::int64_t, int>> factors;

  std::int64_t value() const;
  bool operator==(const Factorization&) const = default;
};

/// Non-negative gcd; gcd(0, 0) == 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Floor-style residue in [0, m).
std::int64_t mod(std::int64_t a, std::int64_t m);

Factorization factorize(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Ramanujan's sum c_d(a), via the closed form phi(d) mu(d/g) / phi(d/g)
/// with g = gcd(a mod d, d).
std::int64_t ramanujan_sum(std::int64_t d, std::int64_t a);

}  // namespace ntcodes::numtheory
