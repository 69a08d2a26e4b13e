#include "ntcodes/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ntcodes::numtheory {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive, got " +
                                std::to_string(n));
  }
}

}  // namespace

std::int64_t Factorization::value() const {
  std::int64_t v = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) v *= p;
  }
  return v;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  require_positive(m, "mod");
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Factorization factorize(std::int64_t n) {
  require_positive(n, "factorize");
  Factorization f;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::int64_t euler_phi(std::int64_t n) {
  require_positive(n, "euler_phi");
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n).factors) result = result / p * (p - 1);
  return result;
}

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t ramanujan_sum(std::int64_t d, std::int64_t a) {
  require_positive(d, "ramanujan_sum");
  const std::int64_t g = gcd(mod(a, d), d);
  const std::int64_t q = d / g;
  const int mu = mobius(q);
  if (mu == 0) return 0;
  // phi(q) divides phi(d) whenever q divides d.
  return euler_phi(d) / euler_phi(q) * mu;
}

}  // namespace ntcodes::numtheory
