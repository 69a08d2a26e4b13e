#include <doctest.h>

#include <algorithm>
#include <set>

#include "ntcodes/codes.hpp"
#include "ntcodes/enumerators.hpp"
#include "ntcodes/errors.hpp"

using namespace ntcodes;
using namespace ntcodes::codes;

namespace {

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

std::set<std::string> reversed_set(const std::vector<Word>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(w.reversed().to_string());
  return out;
}

std::set<std::string> as_set(const std::vector<Word>& words) {
  auto s = strings(words);
  return {s.begin(), s.end()};
}

// Direct transcriptions of the statistic definitions.
std::int64_t gamma_ref(const std::vector<Symbol>& x, int cmp) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const bool hit = cmp == 0 ? x[i] > x[i + 1] : cmp == 1 ? x[i] >= x[i + 1] : cmp == 2 ? x[i] < x[i + 1] : x[i] <= x[i + 1];
    if (hit) v += static_cast<std::int64_t>(i + 1);
  }
  return v;
}

std::int64_t abar(std::int64_t n, std::int64_t a1) { return a1 == 0 ? 0 : n - a1; }

std::int64_t aprime(std::int64_t n, std::int64_t a1) {
  if (n % 2 == 1) return abar(n, a1);
  return n / 2 - a1 + (a1 > n / 2 ? n : 0);
}

}  // namespace

TEST_CASE("statistics") {
  const Word x = parse_word("210", 3);
  CHECK(Statistic::gamma()(x) == 3);
  CHECK(Statistic::sigma()(parse_word("222", 3)) == 6);
  CHECK(Statistic::omega()(parse_word("0000", 2)) == 0);
  CHECK(Statistic::omega()(parse_word("1001", 2)) == 5);
  CHECK(Statistic::delta()(parse_word("2101", 3)) == 2);
  CHECK(Statistic::linear({1, 3, 7})(parse_word("101", 2)) == 8);
  CHECK_THROWS_AS(Statistic::linear({1, 2})(parse_word("101", 2)), std::invalid_argument);
  const Word empty{{}, 3};
  for (const auto& s : {Statistic::omega(), Statistic::sigma(), Statistic::gamma(), Statistic::gamma_ge(),
                        Statistic::lambda_lt(), Statistic::lambda_le(), Statistic::delta()})
    CHECK(s(empty) == 0);
}

TEST_CASE("statistics match their definitions on all short words") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_word(n, 3, kDefaultBudget, [&](std::span<const Symbol> s) {
      const std::vector<Symbol> x(s.begin(), s.end());
      CHECK(Statistic::gamma().evaluate(x) == gamma_ref(x, 0));
      CHECK(Statistic::gamma_ge().evaluate(x) == gamma_ref(x, 1));
      CHECK(Statistic::lambda_lt().evaluate(x) == gamma_ref(x, 2));
      CHECK(Statistic::lambda_le().evaluate(x) == gamma_ref(x, 3));
    });
  }
}

TEST_CASE("word parsing") {
  CHECK(parse_word("012", 3).symbols == std::vector<Symbol>{0, 1, 2});
  CHECK(parse_word("012", 3).reversed().to_string() == "210");
  CHECK_THROWS_AS(parse_word("013", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0a", 3), std::invalid_argument);
}

TEST_CASE("membership") {
  const auto t = tenengolts(3, 3, 0, 0);
  CHECK(t.is_member(parse_word("012", 3)));
  CHECK_FALSE(t.is_member(parse_word("001", 3)));
  CHECK(levenshtein(5, 7, 0).is_member(parse_word("00000", 2)));
  CHECK(nonbinary_svt(4, 3, 5, 0, 0, 0).is_member(parse_word("0000", 3)));
  CHECK_THROWS_AS(t.is_member(parse_word("01", 3)), std::invalid_argument);
  CHECK_THROWS_AS(t.is_member(parse_word("011", 2)), std::invalid_argument);
}

TEST_CASE("enumerate_codewords") {
  CHECK(strings(enumerate_codewords(tenengolts(2, 3, 0, 0))) == std::vector<std::string>{"00", "12"});
  CHECK(strings(enumerate_codewords(tenengolts(2, 3, 1, 1, Variant::Ge))) ==
        std::vector<std::string>{"10", "22"});
  const CodeSpec trivial(3, 3, {{Statistic::omega(), 1, 0}});
  CHECK(enumerate_codewords(trivial).size() == 27);
  CHECK_THROWS_AS(enumerate_codewords(trivial, 26), BudgetExceeded);
  const auto words = enumerate_codewords(tenengolts(4, 3, 1, 2));
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("Tenengolts codeword table for n = r = 3") {
  const std::vector<std::vector<std::string>> expect[3] = {
      {{"000", "012", "111", "210", "222"}, {"001", "022", "112"}, {"002", "011", "122"}},
      {{"102", "201"}, {"100", "202", "211"}, {"101", "200", "212"}},
      {{"021", "120"}, {"010", "121", "220"}, {"020", "110", "221"}},
  };
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = 0; a2 < 3; ++a2) CHECK(strings(enumerate_codewords(tenengolts(3, 3, a1, a2))) == expect[a1][a2]);
}

TEST_CASE("Tenengolts variants for n = 2, r = 3") {
  using V = std::vector<std::string>;
  // rows <a1,a2>; columns >, >=, <, <=
  const std::vector<std::pair<std::pair<int, int>, std::vector<V>>> table = {
      {{0, 0}, {{"00", "12"}, {"12"}, {"00", "21"}, {"21"}}},
      {{0, 1}, {{"01", "22"}, {"01"}, {"10", "22"}, {"10"}}},
      {{0, 2}, {{"02", "11"}, {"02"}, {"11", "20"}, {"20"}}},
      {{1, 0}, {{"21"}, {"00", "21"}, {"12"}, {"00", "12"}}},
      {{1, 1}, {{"10"}, {"10", "22"}, {"01"}, {"01", "22"}}},
      {{1, 2}, {{"20"}, {"11", "20"}, {"02"}, {"02", "11"}}},
  };
  const Variant order[] = {Variant::Gt, Variant::Ge, Variant::Lt, Variant::Le};
  for (const auto& [a, cols] : table)
    for (int v = 0; v < 4; ++v)
      CHECK(strings(enumerate_codewords(tenengolts(2, 3, a.first, a.second, order[v]))) == cols[v]);
}

TEST_CASE("named families") {
  CHECK(strings(enumerate_codewords(binary_vt(4, 0))) ==
        std::vector<std::string>{"0000", "0110", "1001", "1111"});
  CHECK(strings(enumerate_codewords(linear_code(2, {{1, 1}}))) == std::vector<std::string>{"00", "11"});
  CHECK(strings(enumerate_codewords(linear_code(3, {{1, 2}}))) == std::vector<std::string>{"00", "11", "22"});
  CHECK(strings(enumerate_codewords(linear_code(2, {{3, -1}}))) == std::vector<std::string>{"00", "11"});

  const auto helb = helberg(5, 2, 3);
  REQUIRE(helb.num_constraints() == 1);
  CHECK(helb.constraints()[0].modulus == 20);
  CHECK(helb.constraints()[0].stat.linear_weights(5) == std::vector<std::int64_t>{1, 2, 4, 7, 12});

  const auto ln = le_nguyen(3, 3, 1, 0);
  CHECK(ln.constraints()[0].modulus == 15);
  CHECK(ln.constraints()[0].stat.linear_weights(3) == std::vector<std::int64_t>{1, 3, 7});
  // t = 1, r = 2 reduces to the VT construction
  CHECK(helberg(6, 1, 0).constraints()[0].modulus == 7);
  CHECK(enumerate_codewords(helberg(6, 1, 0)) == enumerate_codewords(binary_vt(6, 0)));

  const auto ti = ternary_integer(3, 0);
  CHECK(ti.alphabet() == 3);
  CHECK(ti.constraints()[0].modulus == 17);
  CHECK(ti.constraints()[0].stat.linear_weights(3) == std::vector<std::int64_t>{1, 3, 7});

  const auto svt = shifted_vt(5, 4, 1, 1);
  REQUIRE(svt.num_constraints() == 2);
  CHECK(svt.constraints()[1].modulus == 2);

  const auto nb = nonbinary_svt(5, 3, 4, 1, 1, 2);
  REQUIRE(nb.num_constraints() == 3);
  CHECK(nb.constraints()[1].stat == Statistic::delta());
  CHECK(nb.constraints()[2].modulus == 3);

  CHECK(odd_coefficient(3, 4, 0).constraints()[0].stat.linear_weights(3) == std::vector<std::int64_t>{1, 3, 5});
  CHECK(odd_coefficient(3, 4, 0).constraints()[0].modulus == 8);
  CHECK(an_code(5, 0).length() == 4);
  CHECK(an_code(5, 0).constraints()[0].stat.linear_weights(4) == std::vector<std::int64_t>{1, 2, 4, 8});
  CHECK(exponential_coefficient(3, 2, 0).constraints()[0].modulus == 5);
  CHECK(han_vinck_morita(4, 1, 1).num_constraints() == 2);
  CHECK(blc(3, 4, {1, 2, 3}, 0).alphabet() == 2);

  CHECK_THROWS_AS(tenengolts(3, 3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(tenengolts(3, 3, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(binary_vt(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(lc(3, 4, 2, {1, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(3, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(CodeSpec(3, 2, {{Statistic::omega(), 0, 0}}), std::invalid_argument);
}

TEST_CASE("residues are normalized") {
  const CodeSpec c(3, 2, {{Statistic::omega(), 4, -1}, {Statistic::sigma(), 1, 5}});
  CHECK(c.constraints()[0].residue == 3);
  CHECK(c.constraints()[1].residue == 0);
}

TEST_CASE("weight_sequence") {
  CHECK(weight_sequence(1, 2, 5) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  CHECK(weight_sequence(2, 2, 6) == std::vector<std::int64_t>{1, 2, 4, 7, 12, 20});
  CHECK(weight_sequence(3, 5, 1) == std::vector<std::int64_t>{1});
  CHECK(weight_sequence(1, 3, 4) == std::vector<std::int64_t>{1, 3, 7, 15});
}

TEST_CASE("JSON round trip") {
  const std::vector<CodeSpec> specs = {tenengolts(4, 3, 1, 2, Variant::Le), nonbinary_svt(5, 3, 4, 1, 1, 2),
                                       helberg(5, 2, 3), tenengolts(3, 2, 0, 1, Variant::Ge),
                                       tenengolts(3, 2, 0, 1, Variant::Lt)};
  for (const auto& s : specs) {
    const auto j = s.to_json();
    const auto back = CodeSpec::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(enumerate_codewords(back) == enumerate_codewords(s));
  }
  const auto j = nlohmann::json::parse(
      R"({"n":3,"r":3,"constraints":[{"stat":"gamma_gt","m":3,"a":0},{"stat":"sigma","m":3,"a":0}]})");
  CHECK(strings(enumerate_codewords(CodeSpec::from_json(j))) ==
        std::vector<std::string>{"000", "012", "111", "210", "222"});
  CHECK_THROWS_AS(CodeSpec::from_json(nlohmann::json::parse(
                      R"({"n":3,"r":3,"constraints":[{"stat":"bogus","m":3,"a":0}]})")),
                  std::invalid_argument);
}

TEST_CASE("variant equivalences as set identities") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::uint32_t r = 1; r <= 4; ++r) {
      for (std::int64_t a1 = 0; a1 < n; ++a1) {
        for (std::int64_t a2 = 0; a2 < r; ++a2) {
          const auto N = static_cast<std::size_t>(n);
          const auto lt = as_set(enumerate_codewords(tenengolts(N, r, a1, a2, Variant::Lt)));
          const auto le = as_set(enumerate_codewords(tenengolts(N, r, a1, a2, Variant::Le)));
          const auto ge = as_set(enumerate_codewords(tenengolts(N, r, a1, a2, Variant::Ge)));
          CHECK(lt == reversed_set(enumerate_codewords(tenengolts(N, r, abar(n, a1), a2))));
          CHECK(le == reversed_set(enumerate_codewords(tenengolts(N, r, abar(n, a1), a2, Variant::Ge))));
          CHECK(le == as_set(enumerate_codewords(tenengolts(N, r, aprime(n, a1), a2))));
          CHECK(ge == as_set(enumerate_codewords(tenengolts(N, r, aprime(n, a1), a2, Variant::Lt))));
        }
      }
    }
  }
}

TEST_CASE("Tenengolts codes partition the space") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t r = 1; r <= 4; ++r) {
      std::set<std::vector<Symbol>> seen;
      std::size_t total = 0;
      for (std::int64_t a1 = 0; a1 < static_cast<std::int64_t>(n); ++a1) {
        for (std::int64_t a2 = 0; a2 < r; ++a2) {
          for (const auto& w : enumerate_codewords(tenengolts(n, r, a1, a2))) {
            seen.insert(w.symbols);
            ++total;
          }
        }
      }
      CHECK(total == *space_size(n, r));
      CHECK(seen.size() == total);
    }
  }
}

TEST_CASE("descent identities") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto N = static_cast<std::int64_t>(n);
    for_each_word(n, 3, kDefaultBudget, [&](std::span<const Symbol> s) {
      const Word x{{s.begin(), s.end()}, 3};
      CHECK(Statistic::gamma()(x) + Statistic::lambda_le()(x) == N * (N - 1) / 2);
      const auto lhs = Statistic::lambda_lt()(x.reversed());
      CHECK(((lhs + Statistic::gamma()(x)) % N + N) % N == 0);
      CHECK(lhs == N * Statistic::delta()(x) - Statistic::gamma()(x));
    });
  }
}

TEST_CASE("budget") {
  CHECK(space_size(64, 2) == std::nullopt);
  CHECK(space_size(3, 10) == 1000U);
  CHECK(space_size(0, 5) == 1U);
  CHECK_NOTHROW(check_budget(3, 10, 1000));
  CHECK_THROWS_AS(check_budget(3, 10, 999), BudgetExceeded);
  CHECK(parse_variant(">") == Variant::Gt);
  CHECK(parse_variant("le") == Variant::Le);
  CHECK(parse_variant("<=") == Variant::Le);
  CHECK_THROWS_AS(parse_variant("?"), std::invalid_argument);
}
