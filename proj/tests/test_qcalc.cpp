#include <doctest.h>

#include <algorithm>

#include "ntcodes/codes.hpp"
#include "ntcodes/cyclotomic.hpp"
#include "ntcodes/qcalc.hpp"

using namespace ntcodes;
using namespace ntcodes::qcalc;

namespace {

UPoly as_upoly(const IntPoly& p) {
  std::vector<BigInt> c;
  for (const auto& [m, v] : p.terms()) {
    const std::size_t e = m.empty() ? 0 : m[0];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += v;
  }
  return UPoly(c);
}

UPoly q_factorial(std::uint32_t n) {
  UPoly f({1});
  for (std::uint32_t k = 1; k <= n; ++k) f = f * as_upoly(q_integer(k));
  return f;
}

// exact value of p(e(1/d)) via the group ring
BigInt at_root(const IntPoly& p, std::int64_t d) {
  CycElement acc(d, 0);
  for (const auto& [m, c] : p.terms()) acc.add_root(m.empty() ? 0 : m[0], c);
  return acc.to_integer();
}

// sum of q^gamma(x) over all words x with symbol counts t
IntPoly macmahon_oracle(const Composition& t) {
  const auto r = static_cast<std::uint32_t>(t.length());
  IntPoly acc(std::vector<std::string>{"q"});
  std::vector<codes::Symbol> x;
  for (std::uint32_t j = 0; j < r; ++j) x.insert(x.end(), t.part(j), j);
  const auto gamma = codes::Statistic::gamma();
  do {
    acc.add_term({static_cast<Exponent>(gamma.evaluate(x))}, 1);
  } while (std::next_permutation(x.begin(), x.end()));
  return acc;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(to_text(q_integer(1)) == "1");
  CHECK(to_text(q_integer(3)) == "1 + q + q^2");
  CHECK(q_integer(2).substitute("q", BigInt(-1)) == IntPoly::constant(0));
  CHECK(evaluate_at_ones(q_integer(2).substitute("q", BigInt(-1))) == 0);
  CHECK_THROWS_AS(q_integer(0), std::invalid_argument);
}

TEST_CASE("q-binomials") {
  CHECK(to_text(q_binomial(1, 1)) == "1 + q");
  CHECK(to_text(q_binomial(2, 1)) == "1 + q + q^2");
  CHECK(to_text(q_binomial(0, 4)) == "1");
  CHECK(to_text(q_binomial(4, 0)) == "1");
  for (std::uint32_t a = 0; a <= 8; ++a) {
    for (std::uint32_t b = 0; b <= 8; ++b) {
      const auto p = q_binomial(a, b);
      CHECK(p == q_binomial(b, a));
      CHECK(evaluate_at_ones(p) == binomial(a + b, a));
      // agrees with the quotient of q-factorials
      const UPoly quotient = q_factorial(a + b).divide_exact(q_factorial(a) * q_factorial(b));
      CHECK(as_upoly(p) == quotient);
      CHECK(as_upoly(p).degree() == static_cast<long>(a * b));
    }
  }
}

TEST_CASE("q-multinomials") {
  CHECK(to_text(q_multinomial(Composition({1, 1, 1}))) == "1 + 2*q + 2*q^2 + q^3");
  CHECK(q_multinomial(Composition({1, 1, 1})) == macmahon_oracle(Composition({1, 1, 1})));
  CHECK(to_text(q_multinomial(Composition({5}))) == "1");
  CHECK(evaluate_at_ones(q_multinomial(Composition({2, 2}))) == 6);
  CHECK(multinomial(Composition({2, 2})) == binomial(4, 2));
  for (std::uint32_t n = 0; n <= 8; ++n)
    for (std::uint32_t r = 1; r <= 4; ++r)
      for (const auto& t : compositions(n, r)) CHECK(evaluate_at_ones(q_multinomial(t)) == multinomial(t));
}

TEST_CASE("compositions") {
  const auto c = compositions(2, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0].parts() == std::vector<std::uint32_t>{0, 2});
  CHECK(c[2].parts() == std::vector<std::uint32_t>{2, 0});
  CHECK(compositions(3, 1).size() == 1);
  CHECK(compositions(4, 3).size() == 15);
}

TEST_CASE("q-multinomial at primitive roots") {
  CHECK(q_multinomial_at_root(Composition({1, 1}), 2) == 0);
  CHECK(q_multinomial_at_root(Composition({2, 2}), 2) == 2);
  CHECK(at_root(q_multinomial(Composition({2, 2})), 2) == 2);
  CHECK(q_multinomial_at_root(Composition({3, 3, 3}), 3) == 6);
  CHECK(at_root(q_multinomial(Composition({3, 3, 3})), 3) == 6);
  CHECK_THROWS_AS(q_multinomial_at_root(Composition({1, 2}), 2), std::invalid_argument);
}

TEST_CASE("values at roots of unity, total <= 10") {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint32_t r = 1; r <= 4; ++r) {
      for (const auto& t : compositions(n, r)) {
        const auto p = q_multinomial(t);
        for (auto d = 1U; d <= n; ++d) {
          if (n % d != 0) continue;
          CHECK(at_root(p, d) == q_multinomial_at_root(t, d));
        }
      }
    }
  }
}

TEST_CASE("MacMahon: descent generating function over words of fixed type") {
  for (std::uint32_t n = 0; n <= 7; ++n)
    for (std::uint32_t r = 1; r <= 3; ++r)
      for (const auto& t : compositions(n, r)) CHECK(macmahon_oracle(t) == q_multinomial(t));
}
