#include <doctest.h>

#include <random>

#include "ntcodes/cyclotomic.hpp"
#include "ntcodes/errors.hpp"
#include "ntcodes/multipoly.hpp"
#include "ntcodes/numtheory.hpp"

using namespace ntcodes;

namespace {

CycElement random_element(std::mt19937_64& gen, std::int64_t order) {
  std::vector<BigInt> c(static_cast<std::size_t>(order));
  for (auto& x : c) x = static_cast<std::int64_t>(gen() % 11) - 5;
  return CycElement::from_coeffs(c);
}

IntPoly w() { return IntPoly::variable("w", 1); }
IntPoly one() { return IntPoly::constant(1); }

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycElement::root(1, 0).to_integer() == 1);
  CHECK(CycElement::root(4, 2).to_integer() == -1);
  CHECK(CycElement::root(6, 3).to_integer() == -1);
  CHECK(CycElement::root(6, 3).equals_cyclotomic(CycElement(6, -1)));
  CHECK(CycElement::root(5, -1) == CycElement::root(5, 4));
  CHECK_THROWS_AS(CycElement::root(0, 0), std::invalid_argument);
}

TEST_CASE("ring operations") {
  CHECK((CycElement::root(3, 1) * CycElement::root(3, 2)).to_integer() == 1);
  CycElement s(5, 0);
  for (int j = 1; j <= 4; ++j) s += CycElement::root(5, j);
  CHECK(s.to_integer() == -1);
  const auto a = CycElement::root(7, 3) + CycElement(7, 2);
  CHECK(CycElement(7, 0) + a == a);
  CHECK_THROWS_AS(CycElement::root(3, 1) + CycElement::root(4, 1), OrderMismatch);
  CHECK_THROWS_AS(CycElement::root(3, 1) * CycElement::root(4, 1), OrderMismatch);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 gen(7);
  for (std::int64_t L = 1; L <= 24; ++L) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_element(gen, L);
      const auto b = random_element(gen, L);
      const auto c = random_element(gen, L);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("embed") {
  CHECK(CycElement::root(2, 1).embed(6) == CycElement::root(6, 3));
  CHECK(CycElement(1, 5).embed(9) == CycElement(9, 5));
  CHECK(CycElement::root(3, 1).embed(12) == CycElement::root(12, 4));
  CHECK_THROWS_AS(CycElement::root(4, 1).embed(6), OrderMismatch);
  std::mt19937_64 gen(11);
  for (std::int64_t L = 1; L <= 12; ++L) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      // an integer-valued element: sum of all primitive d-th roots
      for (auto d : numtheory::divisors(L)) {
        CycElement e(L, 0);
        for (std::int64_t j = 1; j <= d; ++j)
          if (numtheory::gcd(j, d) == 1) e.add_root(j * (L / d));
        CHECK(e.embed(L * k).to_integer() == e.to_integer());
      }
      const auto r = random_element(gen, L);
      CHECK(r.embed(L * k).is_integer() == r.is_integer());
    }
  }
}

TEST_CASE("to_integer") {
  CHECK(CycElement(12, 7).to_integer() == 7);
  CHECK((CycElement::root(3, 1) + CycElement::root(3, 2)).to_integer() == -1);
  CHECK_THROWS_AS(CycElement::root(4, 1).to_integer(), NotAnInteger);
  CHECK_FALSE(CycElement::root(4, 1).is_integer());
  // the group-ring representative 1 + x + x^2 is zero as a complex number
  const CycElement z = CycElement::from_coeffs({1, 1, 1});
  CHECK_FALSE(z.is_zero());
  CHECK(z.to_integer() == 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == UPoly({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == UPoly({1, 1}));
  CHECK(cyclotomic_polynomial(6) == UPoly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == UPoly({1, 0, -1, 0, 1}));
  for (std::int64_t L = 1; L <= 24; ++L) {
    UPoly prod({1});
    for (auto d : numtheory::divisors(L)) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == UPoly::x_pow_minus_one(static_cast<std::size_t>(L)));
    CHECK(cyclotomic_polynomial(L).degree() == numtheory::euler_phi(L));
  }
}

TEST_CASE("orthogonality of additive characters") {
  for (std::int64_t m = 1; m <= 24; ++m) {
    for (std::int64_t A = -m; A <= 2 * m; ++A) {
      CycElement s(m, 0);
      for (std::int64_t j = 0; j < m; ++j) s.add_root(A * j);
      CHECK(s.to_integer() == (A % m == 0 ? m : 0));
    }
  }
}

TEST_CASE("MultiPoly arithmetic") {
  CHECK((one() + w()) * (one() - w()) == parse_poly("1 - w^2"));
  CHECK(to_text((one() + w()) * (one() - w())) == "1 - w^2");
  CHECK((one() + IntPoly::variable("q", 1)).pow(0, 1) == one());
  CHECK(to_text((one() + w()).pow(3, 1)) == "1 + 3*w + 3*w^2 + w^3");
  CHECK(to_text(IntPoly{}) == "0");
  CHECK(to_text(w() - w()) == "0");
  CHECK(w().scaled(BigInt(3)) == parse_poly("3*w"));
}

TEST_CASE("substitution specializes the complete enumerator") {
  const IntPoly complete = parse_poly("w0^3 + 2*w0*w1*w2 + w1^3 + w2^3");
  IntPoly h = complete.substitute("w0", BigInt(1));
  h = h.substitute_poly("w1", w(), 1);
  h = h.substitute_poly("w2", w(), 1);
  CHECK(to_text(h) == "1 + 2*w^2 + 2*w^3");
  CHECK(evaluate_at_ones(h) == 5);
}

TEST_CASE("substitution of a root of unity") {
  const IntPoly p = parse_poly("1 + q");
  auto pc = p.map_coefficients([](const BigInt& c) { return CycElement(2, c); });
  const auto v = pc.substitute("q", CycElement::root(2, 1));
  REQUIRE(v.size() == 1);
  CHECK(v.terms().begin()->second.to_integer() == 0);
}

TEST_CASE("exact division") {
  CHECK(divide_exact(parse_poly("3 + 6*w"), 3) == parse_poly("1 + 2*w"));
  CHECK_THROWS_AS(divide_exact(parse_poly("2 + 3*w"), 2), NonDivisible);
  CHECK(divide_exact(IntPoly{}, 5).is_zero());
  CHECK(divide_exact(parse_poly("-4*w"), 2) == parse_poly("-2*w"));
}

TEST_CASE("exponent overflow is detected") {
  IntPoly big(std::vector<std::string>{"w"});
  big.add_term({std::numeric_limits<Exponent>::max()}, 1);
  CHECK_THROWS_AS(big * w(), std::overflow_error);
}

TEST_CASE("canonical variable and term order") {
  const IntPoly p = parse_poly("q + w + z2 + w1 + z1 + w0");
  CHECK(p.variables() == std::vector<std::string>{"z1", "z2", "w", "w0", "w1", "q"});
  // total degree first, then the earlier variable carries the larger exponent
  CHECK(to_text(parse_poly("z2^6*w2^3 + w0^3 + z2^3*w1^3")) == "w0^3 + z2^3*w1^3 + z2^6*w2^3");
}

TEST_CASE("text round trip is a fixed point") {
  std::mt19937_64 gen(3);
  const std::vector<std::string> names{"z1", "z2", "w0", "w1", "w2", "q"};
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p(names);
    const int terms = static_cast<int>(gen() % 6);
    for (int t = 0; t < terms; ++t) {
      Monomial m(names.size());
      for (auto& e : m) e = static_cast<Exponent>(gen() % 4);
      p.add_term(m, BigInt(static_cast<std::int64_t>(gen() % 2001) - 1000) * BigInt("100000000000000000000"));
    }
    const std::string s = to_text(p);
    CHECK(to_text(parse_poly(s)) == s);
    CHECK(parse_poly(s) == p);
  }
  CHECK_THROWS_AS(parse_poly("1 + * w"), std::invalid_argument);
}
