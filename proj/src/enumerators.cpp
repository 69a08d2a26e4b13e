#include "ntcodes/enumerators.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "ntcodes/cyclotomic.hpp"
#include "ntcodes/errors.hpp"
#include "ntcodes/numtheory.hpp"
#include "ntcodes/qcalc.hpp"

namespace ntcodes::enumerators {

using codes::CodeSpec;
using codes::StatKind;
using codes::Statistic;
using codes::Symbol;
using codes::Variant;
using codes::Word;

namespace {

std::atomic<std::uint64_t> g_integrality_checks{0};

/// Validates a character-sum numerator and divides it by the normalization.
BigInt checked_quotient(const BigInt& numerator, const BigInt& divisor, const char* where) {
  if (numerator < 0) {
    throw NonDivisible(std::string(where) + ": negative character-sum coefficient " +
                       numerator.str());
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, divisor, q, r);
  if (!r.is_zero()) {
    throw NonDivisible(std::string(where) + ": " + numerator.str() + " not divisible by " +
                       divisor.str());
  }
  g_integrality_checks.fetch_add(1, std::memory_order_relaxed);
  return q;
}

Exponent to_exponent(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("statistic value is negative; cannot be an exponent");
  if (static_cast<std::uint64_t>(v) > std::numeric_limits<Exponent>::max()) {
    throw std::overflow_error("statistic value exceeds exponent range");
  }
  return static_cast<Exponent>(v);
}

IntPoly brute_force(std::size_t n, std::uint32_t r, const std::vector<Statistic>& stats,
                    std::uint64_t budget, const CodeSpec* filter) {
  const std::size_t s = stats.size();
  IntPoly poly(extended_variables(s, r));
  Monomial m(s + r);
  codes::for_each_word(n, r, budget, [&](std::span<const Symbol> x) {
    if (filter && !filter->contains(x)) return;
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < s; ++i) m[i] = to_exponent(stats[i].evaluate(x));
    for (auto sym : x) ++m[s + sym];
    poly.add_term(m, BigInt(1));
  });
  return poly;
}

IntPoly product_form(std::size_t n, std::uint32_t r, const std::vector<Statistic>& stats) {
  const std::size_t s = stats.size();
  const auto vars = extended_variables(s, r);
  std::vector<std::vector<std::int64_t>> h;
  for (const auto& st : stats) h.push_back(st.linear_weights(n));
  IntPoly result = IntPoly::constant(1, vars);
  for (std::size_t j = 0; j < n; ++j) {
    IntPoly factor(vars);
    for (std::uint32_t k = 0; k < r; ++k) {
      Monomial m(s + r, 0);
      for (std::size_t i = 0; i < s; ++i) m[i] = checked_exponent_mul(to_exponent(h[i][j]), k);
      m[s + k] = 1;
      factor.add_term(m, BigInt(1));
    }
    result = result * factor;
  }
  return result;
}

/// Sum over compositions t of n of (descent generating function over S(t))
/// times prod_j w_j^{t_j} z_sigma^{j t_j}.
IntPoly macmahon_form(std::size_t n, std::uint32_t r, const std::vector<Statistic>& stats) {
  const std::size_t s = stats.size();
  std::size_t desc = 0;
  std::optional<std::size_t> sig;
  for (std::size_t i = 0; i < s; ++i) {
    if (stats[i].is_descent_type()) desc = i;
    else sig = i;
  }
  const bool reflected =
      stats[desc].kind() == StatKind::GammaGe || stats[desc].kind() == StatKind::LambdaLe;
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;

  IntPoly poly(extended_variables(s, r));
  for (const auto& t : qcalc::compositions(static_cast<std::uint32_t>(n), r)) {
    const IntPoly qm = qcalc::q_multinomial(t);
    // Degree of the q-multinomial: sum_{i<j} t_i t_j.
    std::uint64_t degree = 0, prefix = 0;
    for (auto p : t.parts()) {
      degree += prefix * p;
      prefix += p;
    }
    // >= and <= descents satisfy stat = n(n-1)/2 - (a statistic distributed
    // like gamma on S(t)); the q-multinomial is palindromic.
    const std::uint64_t shift = reflected ? pairs - degree : 0;
    Monomial m(s + r, 0);
    std::uint64_t sigma = 0;
    for (std::uint32_t j = 0; j < r; ++j) {
      m[s + j] = t.part(j);
      sigma += static_cast<std::uint64_t>(j) * t.part(j);
    }
    if (sig) m[*sig] = to_exponent(static_cast<std::int64_t>(sigma));
    for (const auto& [qe, c] : qm.terms()) {
      m[desc] = to_exponent(static_cast<std::int64_t>(qe[0] + shift));
      poly.add_term(m, c);
    }
  }
  return poly;
}

bool macmahon_applicable(const std::vector<Statistic>& stats) {
  std::size_t desc = 0, sigma = 0;
  for (const auto& st : stats) {
    if (st.is_descent_type()) ++desc;
    else if (st.kind() == StatKind::Sigma) ++sigma;
    else return false;
  }
  return desc == 1 && sigma <= 1;
}

}  // namespace

std::string kind_name(EnumeratorKind k) {
  switch (k) {
    case EnumeratorKind::Extended: return "extended";
    case EnumeratorKind::Complete: return "complete";
    case EnumeratorKind::Hamming: return "hamming";
  }
  return "?";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::CharacterSum: return "character_sum";
    case Method::ClosedForm: return "closed_form";
  }
  return "?";
}

EnumeratorKind parse_kind(const std::string& s) {
  if (s == "extended") return EnumeratorKind::Extended;
  if (s == "complete") return EnumeratorKind::Complete;
  if (s == "hamming") return EnumeratorKind::Hamming;
  throw std::invalid_argument("unknown enumerator kind '" + s + "'");
}

namespace {
Method parse_method(const std::string& s) {
  if (s == "oracle") return Method::Oracle;
  if (s == "character_sum") return Method::CharacterSum;
  if (s == "closed_form") return Method::ClosedForm;
  throw std::invalid_argument("unknown method '" + s + "'");
}
}  // namespace

std::string z_var(std::size_t i) { return "z" + std::to_string(i + 1); }
std::string w_var(std::size_t j) { return "w" + std::to_string(j); }

std::vector<std::string> extended_variables(std::size_t s, std::uint32_t r) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < s; ++i) v.push_back(z_var(i));
  for (std::uint32_t j = 0; j < r; ++j) v.push_back(w_var(j));
  return v;
}

std::vector<std::string> complete_variables(std::uint32_t r) { return extended_variables(0, r); }

nlohmann::json Enumerator::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : poly.terms()) terms.push_back({{"exp", m}, {"coef", c.str()}});
  return {{"kind", kind_name(kind)},
          {"variables", poly.variables()},
          {"terms", terms},
          {"cardinality", cardinality().str()},
          {"method", method_name(method)}};
}

namespace {

// Hamming: {w}; Complete: w0..w{r-1}; Extended: z1..zs followed by w0..w{r-1}.
bool variables_fit_kind(EnumeratorKind kind, const std::vector<std::string>& vars) {
  if (kind == EnumeratorKind::Hamming) return vars == std::vector<std::string>{"w"};
  std::size_t s = 0;
  while (s < vars.size() && vars[s] == z_var(s)) ++s;
  if (kind == EnumeratorKind::Complete && s != 0) return false;
  if (kind == EnumeratorKind::Extended && s == 0) return false;
  for (std::size_t j = s; j < vars.size(); ++j)
    if (vars[j] != w_var(j - s)) return false;
  return vars.size() > s;
}

}  // namespace

Enumerator Enumerator::from_json(const nlohmann::json& j) {
  try {
    IntPoly poly(j.at("variables").get<std::vector<std::string>>());
    const auto declared = j.at("variables").get<std::vector<std::string>>();
    if (declared != poly.variables()) {
      throw std::invalid_argument("enumerator JSON variables are not in canonical order");
    }
    const EnumeratorKind kind = parse_kind(j.at("kind").get<std::string>());
    if (!variables_fit_kind(kind, declared)) {
      throw std::invalid_argument("enumerator JSON variables do not match kind " + kind_name(kind));
    }
    for (const auto& t : j.at("terms")) {
      poly.add_term(t.at("exp").get<Monomial>(), BigInt(t.at("coef").get<std::string>()));
    }
    Enumerator e{kind, std::move(poly), std::nullopt,
                 parse_method(j.at("method").get<std::string>())};
    if (j.contains("cardinality") && BigInt(j["cardinality"].get<std::string>()) != e.cardinality()) {
      throw std::invalid_argument("enumerator JSON cardinality does not match its terms");
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed enumerator JSON: ") + ex.what());
  }
}

std::uint64_t integrality_checks() { return g_integrality_checks.load(); }

IntPoly extended_of_words(const std::vector<Word>& words, const std::vector<Statistic>& stats,
                          std::uint32_t r) {
  const std::size_t s = stats.size();
  IntPoly poly(extended_variables(s, r));
  Monomial m(s + r);
  for (const auto& x : words) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t i = 0; i < s; ++i) m[i] = to_exponent(stats[i](x));
    for (auto sym : x.symbols) {
      if (sym >= r) throw std::invalid_argument("word symbol outside the alphabet");
      ++m[s + sym];
    }
    poly.add_term(m, BigInt(1));
  }
  return poly;
}

Enumerator oracle_extended(const CodeSpec& spec, std::uint64_t budget) {
  return {EnumeratorKind::Extended,
          brute_force(spec.length(), spec.alphabet(), spec.statistics(), budget, &spec), spec,
          Method::Oracle};
}

Enumerator specialize(const Enumerator& e, EnumeratorKind target) {
  if (static_cast<int>(target) < static_cast<int>(e.kind)) {
    throw std::invalid_argument("cannot specialize a " + kind_name(e.kind) + " enumerator to " +
                                kind_name(target));
  }
  IntPoly p = e.poly;
  if (e.kind == EnumeratorKind::Extended && target != EnumeratorKind::Extended) {
    for (const auto& v : e.poly.variables()) {
      if (!v.empty() && v[0] == 'z') p = p.substitute(v, BigInt(1));
    }
  }
  if (e.kind != EnumeratorKind::Hamming && target == EnumeratorKind::Hamming) {
    const IntPoly w = IntPoly::variable("w", 1);
    IntPoly h = p.substitute(w_var(0), BigInt(1));
    for (const auto& v : p.variables()) {
      if (v != w_var(0)) h = h.substitute_poly(v, w, BigInt(1));
    }
    p = h.with_variables(merge_variables(h.variables(), {"w"}));
  }
  return {target, std::move(p), e.spec, e.method};
}

FullSpace full_space_enumerator(std::size_t n, std::uint32_t r, const std::vector<Statistic>& stats,
                                std::uint64_t budget) {
  if (r == 0) throw std::invalid_argument("alphabet size must be positive");
  bool all_linear = true;
  for (const auto& st : stats) all_linear = all_linear && st.is_linear();
  if (all_linear) return {product_form(n, r, stats), FullSpaceMethod::ProductForm};
  if (macmahon_applicable(stats)) return {macmahon_form(n, r, stats), FullSpaceMethod::MacMahon};
  return {brute_force(n, r, stats, budget, nullptr), FullSpaceMethod::BruteForce};
}

Enumerator character_sum_extended(const CodeSpec& spec, const CharacterSumOptions& options) {
  const auto& cons = spec.constraints();
  const std::size_t s = cons.size();
  FullSpace full = full_space_enumerator(spec.length(), spec.alphabet(), spec.statistics(),
                                         options.budget);

  IntPoly result(extended_variables(s, spec.alphabet()));
  if (full.method == FullSpaceMethod::BruteForce && options.allow_filter_fast_path) {
    for (const auto& [m, c] : full.poly.terms()) {
      bool keep = true;
      for (std::size_t i = 0; i < s && keep; ++i) {
        keep = numtheory::mod(static_cast<std::int64_t>(m[i]), cons[i].modulus) == cons[i].residue;
      }
      if (keep) result.add_term(m, c);
    }
    return {EnumeratorKind::Extended, std::move(result), spec, Method::Oracle};
  }

  std::int64_t order = 1;
  BigInt normalization = 1;
  for (const auto& c : cons) {
    order = numtheory::lcm(order, c.modulus);
    normalization *= c.modulus;
  }

  // Substituting z_i -> z_i e(u_i/m_i) and weighting by e(-a_i u_i/m_i) turns a
  // term with z-exponents e into c * sum_u zeta_L^{sum_i (e_i - a_i) u_i L/m_i}.
  // That sum depends only on the residues (e_i - a_i) mod m_i, so it is
  // accumulated once per residue pattern.
  std::map<std::vector<std::int64_t>, BigInt> pattern_sums;
  auto character_sum = [&](const std::vector<std::int64_t>& pattern) -> const BigInt& {
    auto it = pattern_sums.find(pattern);
    if (it != pattern_sums.end()) return it->second;
    CycElement acc(order, 0);
    std::vector<std::int64_t> u(s, 0);
    while (true) {
      std::int64_t k = 0;
      for (std::size_t i = 0; i < s; ++i) k += pattern[i] * u[i] * (order / cons[i].modulus);
      acc.add_root(k);
      std::size_t i = s;
      while (i > 0 && u[i - 1] + 1 == cons[i - 1].modulus) u[--i] = 0;
      if (i == 0) break;
      ++u[i - 1];
    }
    return pattern_sums.emplace(pattern, acc.to_integer()).first->second;
  };

  std::vector<std::int64_t> pattern(s);
  for (const auto& [m, c] : full.poly.terms()) {
    for (std::size_t i = 0; i < s; ++i) {
      pattern[i] = numtheory::mod(static_cast<std::int64_t>(m[i]) - cons[i].residue, cons[i].modulus);
    }
    const BigInt numerator = c * character_sum(pattern);
    result.add_term(m, checked_quotient(numerator, normalization, "character_sum_extended"));
  }
  return {EnumeratorKind::Extended, std::move(result), spec, Method::CharacterSum};
}

Enumerator lc_hamming(std::size_t n, std::int64_t m, std::uint32_t r,
                      const std::vector<std::int64_t>& h, std::int64_t a) {
  CodeSpec spec = codes::lc(n, m, r, h, numtheory::mod(a, m));
  std::vector<CycElement> total(n + 1, CycElement(m, 0));
  for (std::int64_t u = 0; u < m; ++u) {
    std::vector<CycElement> prod(n + 1, CycElement(m, 0));
    prod[0] = CycElement(m, 1);
    for (std::size_t j = 0; j < n; ++j) {
      CycElement inner(m, 0);
      for (std::uint32_t k = 1; k < r; ++k) inner.add_root(h[j] * k * u);
      for (std::size_t i = j + 1; i-- > 0;) prod[i + 1] += prod[i] * inner;
    }
    for (std::size_t i = 0; i <= n; ++i) total[i] += prod[i].rotated(-a * u);
  }
  IntPoly poly(std::vector<std::string>{"w"});
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt coeff = checked_quotient(total[i].to_integer(), m, "lc_hamming");
    poly.add_term(Monomial{static_cast<Exponent>(i)}, coeff);
  }
  return {EnumeratorKind::Hamming, std::move(poly), std::move(spec), Method::CharacterSum};
}

Enumerator blc_hamming(std::size_t n, std::int64_t m, const std::vector<std::int64_t>& h,
                       std::int64_t a) {
  return lc_hamming(n, m, 2, h, a);
}

VariantTransform tenengolts_variant_transform(Variant variant, std::size_t n, std::int64_t a1) {
  const auto nn = static_cast<std::int64_t>(n);
  if (nn < 1 || a1 < 0 || a1 >= nn) {
    throw std::invalid_argument("a1 must lie in [0, n)");
  }
  const bool odd = nn % 2 == 1;
  const std::int64_t half = nn / 2;
  const std::int64_t bar = a1 != 0 ? nn - a1 : 0;
  switch (variant) {
    case Variant::Gt: return {a1, false};
    case Variant::Lt: return {bar, true};
    case Variant::Le: return {odd ? bar : half - a1 + (a1 > half ? nn : 0), false};
    case Variant::Ge: return {odd ? a1 : half + a1 - (a1 >= half ? nn : 0), true};
  }
  return {a1, false};
}

namespace {
void check_tenengolts_range(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2) {
  if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
  if (a1 < 0 || a1 >= static_cast<std::int64_t>(n)) throw std::invalid_argument("a1 must lie in [0, n)");
  if (a2 < 0 || a2 >= static_cast<std::int64_t>(r)) throw std::invalid_argument("a2 must lie in [0, r)");
}
}  // namespace

Enumerator tenengolts_hamming(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2,
                              Variant variant) {
  check_tenengolts_range(n, r, a1, a2);
  const std::int64_t base = tenengolts_variant_transform(variant, n, a1).base_a1;
  const auto nn = static_cast<std::int64_t>(n);
  const auto rr = static_cast<std::int64_t>(r);
  std::vector<BigInt> acc(n + 1, BigInt(0));
  for (std::int64_t d : numtheory::divisors(nn)) {
    const std::int64_t cd = numtheory::ramanujan_sum(d, base);
    if (cd == 0) continue;
    const auto power = static_cast<std::uint64_t>(nn / d);
    for (std::int64_t e : numtheory::divisors(rr)) {
      const std::int64_t ce = numtheory::ramanujan_sum(e, a2);
      if (ce == 0) continue;
      // (1 + k w^d)^{n/d} with k = r [e | d] - 1
      const BigInt k = (d % e == 0 ? rr : 0) - 1;
      BigInt kp = 1;
      for (std::uint64_t j = 0; j <= power; ++j) {
        acc[static_cast<std::size_t>(j * d)] += BigInt(cd * ce) * qcalc::binomial(power, j) * kp;
        kp *= k;
      }
    }
  }
  IntPoly poly(std::vector<std::string>{"w"});
  const BigInt norm = BigInt(nn) * rr;
  for (std::size_t i = 0; i <= n; ++i) {
    poly.add_term(Monomial{static_cast<Exponent>(i)},
                  checked_quotient(acc[i], norm, "tenengolts_hamming"));
  }
  return {EnumeratorKind::Hamming, std::move(poly), codes::tenengolts(n, r, a1, a2, variant),
          Method::ClosedForm};
}

BigInt tenengolts_cardinality(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2,
                              Variant variant) {
  check_tenengolts_range(n, r, a1, a2);
  const std::int64_t base = tenengolts_variant_transform(variant, n, a1).base_a1;
  const auto nn = static_cast<std::int64_t>(n);
  const auto rr = static_cast<std::int64_t>(r);
  BigInt acc = 0;
  for (std::int64_t d : numtheory::divisors(nn)) {
    const std::int64_t g = numtheory::gcd(rr, d);
    if (a2 % g != 0) continue;
    acc += BigInt(numtheory::ramanujan_sum(d, base)) *
           boost::multiprecision::pow(BigInt(rr), static_cast<unsigned>(nn / d)) * g;
  }
  return checked_quotient(acc, BigInt(nn) * rr, "tenengolts_cardinality");
}

IntPoly tenengolts_full_space_hamming_at(std::size_t n, std::uint32_t r, std::int64_t u1,
                                         std::int64_t u2) {
  const auto nn = static_cast<std::int64_t>(n);
  const auto rr = static_cast<std::int64_t>(r);
  const std::int64_t g = numtheory::gcd(nn, numtheory::mod(u1, nn));
  const std::int64_t d = nn / g;
  const bool hit = numtheory::mod(d * u2, rr) == 0;
  IntPoly w = IntPoly::variable("w", 1);
  IntPoly base = IntPoly::constant(1, {"w"}) +
                 w.pow(static_cast<std::uint64_t>(d), 1).scaled(BigInt(hit ? rr - 1 : -1));
  return base.pow(static_cast<std::uint64_t>(g), 1);
}

std::vector<std::pair<std::int64_t, std::int64_t>> argmax_cardinality(std::size_t n, std::uint32_t r,
                                                                      Variant variant) {
  std::vector<std::pair<std::int64_t, std::int64_t>> best;
  BigInt best_value = -1;
  for (std::int64_t a1 = 0; a1 < static_cast<std::int64_t>(n); ++a1) {
    for (std::int64_t a2 = 0; a2 < static_cast<std::int64_t>(r); ++a2) {
      const BigInt v = tenengolts_cardinality(n, r, a1, a2, variant);
      if (v > best_value) {
        best_value = v;
        best.clear();
      }
      if (v == best_value) best.emplace_back(a1, a2);
    }
  }
  return best;
}

}  // namespace ntcodes::enumerators
