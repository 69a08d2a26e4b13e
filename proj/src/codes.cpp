#include "ntcodes/codes.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "ntcodes/errors.hpp"
#include "ntcodes/numtheory.hpp"

namespace ntcodes::codes {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

void require(bool ok, const std::string& what) {
  if (!ok) invalid(what);
}

void require_in_range(std::int64_t v, std::int64_t hi, const char* name) {
  if (v < 0 || v >= hi) {
    invalid(std::string(name) + " must lie in [0, " + std::to_string(hi) + "), got " +
            std::to_string(v));
  }
}

std::int64_t pow2(std::int64_t k) {
  require(k >= 0 && k < 62, "power of two out of range");
  return std::int64_t{1} << k;
}

}  // namespace

std::string Word::to_string() const {
  std::string s;
  const bool wide = alphabet > 10;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (wide) {
      if (i) s += ',';
      s += std::to_string(symbols[i]);
    } else {
      s += static_cast<char>('0' + symbols[i]);
    }
  }
  return s;
}

Word Word::reversed() const {
  return Word{std::vector<Symbol>(symbols.rbegin(), symbols.rend()), alphabet};
}

Word parse_word(const std::string& digits, std::uint32_t alphabet) {
  Word w{{}, alphabet};
  for (char c : digits) {
    require(c >= '0' && c <= '9', "parse_word: non-digit in '" + digits + "'");
    const auto v = static_cast<Symbol>(c - '0');
    require(v < alphabet, "parse_word: symbol outside alphabet in '" + digits + "'");
    w.symbols.push_back(v);
  }
  return w;
}

Statistic::Statistic(StatKind k) : kind_(k) {
  switch (k) {
    case StatKind::Omega: name_ = "omega"; break;
    case StatKind::Sigma: name_ = "sigma"; break;
    case StatKind::GammaGt: name_ = "gamma_gt"; break;
    case StatKind::GammaGe: name_ = "gamma_ge"; break;
    case StatKind::LambdaLt: name_ = "lambda_lt"; break;
    case StatKind::LambdaLe: name_ = "lambda_le"; break;
    case StatKind::Delta: name_ = "delta"; break;
    case StatKind::Linear: name_ = "linear"; break;
    case StatKind::Custom: name_ = "custom"; break;
  }
}

Statistic Statistic::linear(std::vector<std::int64_t> weights) {
  for (auto h : weights) require(h >= 0, "linear statistic weights must be non-negative");
  Statistic s(StatKind::Linear);
  s.weights_ = std::move(weights);
  return s;
}

Statistic Statistic::custom(std::string name, CustomFn fn) {
  Statistic s(StatKind::Custom);
  s.name_ = std::move(name);
  s.custom_ = std::make_shared<const CustomFn>(std::move(fn));
  return s;
}

bool Statistic::is_linear() const {
  return kind_ == StatKind::Omega || kind_ == StatKind::Sigma || kind_ == StatKind::Linear;
}

bool Statistic::is_descent_type() const {
  return kind_ == StatKind::GammaGt || kind_ == StatKind::GammaGe || kind_ == StatKind::LambdaLt ||
         kind_ == StatKind::LambdaLe;
}

std::vector<std::int64_t> Statistic::linear_weights(std::size_t n) const {
  switch (kind_) {
    case StatKind::Omega: {
      std::vector<std::int64_t> h(n);
      for (std::size_t i = 0; i < n; ++i) h[i] = static_cast<std::int64_t>(i + 1);
      return h;
    }
    case StatKind::Sigma:
      return std::vector<std::int64_t>(n, 1);
    case StatKind::Linear:
      require(weights_.size() == n, "linear statistic length " + std::to_string(weights_.size()) +
                                        " does not match word length " + std::to_string(n));
      return weights_;
    default:
      invalid("statistic '" + name_ + "' is not linear");
  }
}

std::int64_t Statistic::evaluate(std::span<const Symbol> x) const {
  const std::size_t n = x.size();
  std::int64_t v = 0;
  auto descents = [&](auto cmp, bool weighted) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (cmp(x[i], x[i + 1])) v += weighted ? static_cast<std::int64_t>(i + 1) : 1;
    }
  };
  switch (kind_) {
    case StatKind::Omega:
      for (std::size_t i = 0; i < n; ++i) v += static_cast<std::int64_t>(i + 1) * x[i];
      break;
    case StatKind::Sigma:
      for (auto s : x) v += s;
      break;
    case StatKind::GammaGt: descents([](Symbol a, Symbol b) { return a > b; }, true); break;
    case StatKind::GammaGe: descents([](Symbol a, Symbol b) { return a >= b; }, true); break;
    case StatKind::LambdaLt: descents([](Symbol a, Symbol b) { return a < b; }, true); break;
    case StatKind::LambdaLe: descents([](Symbol a, Symbol b) { return a <= b; }, true); break;
    case StatKind::Delta: descents([](Symbol a, Symbol b) { return a > b; }, false); break;
    case StatKind::Linear:
      require(weights_.size() == n, "linear statistic length " + std::to_string(weights_.size()) +
                                        " does not match word length " + std::to_string(n));
      for (std::size_t i = 0; i < n; ++i) v += weights_[i] * x[i];
      break;
    case StatKind::Custom:
      v = (*custom_)(x);
      break;
  }
  return v;
}

bool Statistic::operator==(const Statistic& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == StatKind::Linear) return weights_ == other.weights_;
  if (kind_ == StatKind::Custom) return custom_ == other.custom_;
  return true;
}

CodeSpec::CodeSpec(std::size_t n, std::uint32_t r, std::vector<Constraint> constraints)
    : n_(n), r_(r), constraints_(std::move(constraints)) {
  require(r_ >= 1, "alphabet size must be positive");
  require(!constraints_.empty(), "a code needs at least one constraint");
  for (auto& c : constraints_) {
    require(c.modulus >= 1, "moduli must be positive, got " + std::to_string(c.modulus));
    c.residue = numtheory::mod(c.residue, c.modulus);
    if (c.stat.kind() == StatKind::Linear) {
      require(c.stat.weights().size() == n_, "linear statistic length does not match code length");
    }
  }
}

std::vector<Statistic> CodeSpec::statistics() const {
  std::vector<Statistic> out;
  out.reserve(constraints_.size());
  for (const auto& c : constraints_) out.push_back(c.stat);
  return out;
}

bool CodeSpec::contains(std::span<const Symbol> x) const {
  for (const auto& c : constraints_) {
    if (numtheory::mod(c.stat.evaluate(x), c.modulus) != c.residue) return false;
  }
  return true;
}

bool CodeSpec::is_member(const Word& x) const {
  require(x.length() == n_, "word length " + std::to_string(x.length()) +
                                " does not match code length " + std::to_string(n_));
  require(x.alphabet == r_, "word alphabet does not match code alphabet");
  for (auto s : x.symbols) require(s < r_, "word symbol outside the alphabet");
  return contains(x.symbols);
}

nlohmann::json CodeSpec::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : constraints_) {
    nlohmann::json stat;
    switch (c.stat.kind()) {
      case StatKind::Linear: stat = {{"linear", c.stat.weights()}}; break;
      case StatKind::Custom: invalid("custom statistics cannot be serialized");
      default: stat = c.stat.name();
    }
    cs.push_back({{"stat", stat}, {"m", c.modulus}, {"a", c.residue}});
  }
  return {{"n", n_}, {"r", r_}, {"constraints", cs}};
}

CodeSpec CodeSpec::from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    const auto r = j.at("r").get<std::int64_t>();
    require(n >= 0, "n must be non-negative");
    require(r >= 1, "r must be positive");
    std::vector<Constraint> cs;
    for (const auto& c : j.at("constraints")) {
      const auto& s = c.at("stat");
      std::optional<Statistic> stat;
      if (s.is_object()) {
        stat = Statistic::linear(s.at("linear").get<std::vector<std::int64_t>>());
      } else {
        const auto name = s.get<std::string>();
        if (name == "omega") stat = Statistic::omega();
        else if (name == "sigma") stat = Statistic::sigma();
        else if (name == "gamma_gt" || name == "gamma") stat = Statistic::gamma();
        else if (name == "gamma_ge") stat = Statistic::gamma_ge();
        else if (name == "lambda_lt") stat = Statistic::lambda_lt();
        else if (name == "lambda_le") stat = Statistic::lambda_le();
        else if (name == "delta") stat = Statistic::delta();
        else invalid("unknown statistic '" + name + "'");
      }
      cs.push_back({*stat, c.at("m").get<std::int64_t>(), c.at("a").get<std::int64_t>()});
    }
    return CodeSpec(static_cast<std::size_t>(n), static_cast<std::uint32_t>(r), std::move(cs));
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("malformed code spec JSON: ") + e.what());
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CODES_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

std::optional<std::uint64_t> space_size(std::size_t n, std::uint32_t r) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r != 0 && total > std::numeric_limits<std::uint64_t>::max() / r) return std::nullopt;
    total *= r;
  }
  return total;
}

void check_budget(std::size_t n, std::uint32_t r, std::uint64_t budget) {
  const auto size = space_size(n, r);
  if (!size || *size > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(r) + "^" + std::to_string(n) +
                         " words exceeds the budget of " + std::to_string(budget));
  }
}

void for_each_word(std::size_t n, std::uint32_t r, std::uint64_t budget,
                   const std::function<void(std::span<const Symbol>)>& visit) {
  check_budget(n, r, budget);
  std::vector<Symbol> x(n, 0);
  while (true) {
    visit(x);
    std::size_t i = n;
    while (i > 0 && x[i - 1] + 1 == r) x[--i] = 0;
    if (i == 0) return;
    ++x[i - 1];
  }
}

std::vector<Word> enumerate_codewords(const CodeSpec& spec, std::uint64_t budget) {
  std::vector<Word> out;
  for_each_word(spec.length(), spec.alphabet(), budget, [&](std::span<const Symbol> x) {
    if (spec.contains(x)) out.push_back(Word{{x.begin(), x.end()}, spec.alphabet()});
  });
  return out;
}

std::vector<std::int64_t> weight_sequence(std::int64_t t, std::int64_t r, std::size_t length) {
  require(t >= 1 && r >= 1, "weight_sequence: t and r must be positive");
  std::vector<std::int64_t> g(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = 1; j <= t && static_cast<std::int64_t>(i) - j >= 0; ++j) {
      acc += g[i - static_cast<std::size_t>(j)];
    }
    g[i] = 1 + (r - 1) * acc;
  }
  return g;
}

Variant parse_variant(const std::string& s) {
  if (s == ">" || s == "gt") return Variant::Gt;
  if (s == ">=" || s == "ge") return Variant::Ge;
  if (s == "<" || s == "lt") return Variant::Lt;
  if (s == "<=" || s == "le") return Variant::Le;
  invalid("unknown Tenengolts variant '" + s + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Gt: return "gt";
    case Variant::Ge: return "ge";
    case Variant::Lt: return "lt";
    case Variant::Le: return "le";
  }
  return "?";
}

Statistic descent_statistic(Variant v) {
  switch (v) {
    case Variant::Gt: return Statistic::gamma();
    case Variant::Ge: return Statistic::gamma_ge();
    case Variant::Lt: return Statistic::lambda_lt();
    case Variant::Le: return Statistic::lambda_le();
  }
  return Statistic::gamma();
}

CodeSpec binary_vt(std::size_t n, std::int64_t a) {
  const auto m = static_cast<std::int64_t>(n) + 1;
  require_in_range(a, m, "a");
  return CodeSpec(n, 2, {{Statistic::omega(), m, a}});
}

CodeSpec levenshtein(std::size_t n, std::int64_t m, std::int64_t a) {
  require(m >= 1, "m must be positive");
  require_in_range(a, m, "a");
  return CodeSpec(n, 2, {{Statistic::omega(), m, a}});
}

CodeSpec tenengolts(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2, Variant variant) {
  require(n >= 1 && r >= 1, "n and r must be positive");
  require_in_range(a1, static_cast<std::int64_t>(n), "a1");
  require_in_range(a2, r, "a2");
  return CodeSpec(n, r,
                  {{descent_statistic(variant), static_cast<std::int64_t>(n), a1},
                   {Statistic::sigma(), static_cast<std::int64_t>(r), a2}});
}

CodeSpec shifted_vt(std::size_t n, std::int64_t m, std::int64_t a, std::int64_t parity) {
  require(m >= 1, "m must be positive");
  require_in_range(a, m, "a");
  require_in_range(parity, 2, "parity");
  return CodeSpec(n, 2, {{Statistic::omega(), m, a}, {Statistic::sigma(), 2, parity}});
}

CodeSpec han_vinck_morita(std::size_t n, std::int64_t a, std::int64_t b) {
  const auto m = static_cast<std::int64_t>(n) + 1;
  require_in_range(a, m, "a");
  require_in_range(b, 3, "b");
  return CodeSpec(n, 2, {{Statistic::omega(), m, a}, {Statistic::sigma(), 3, b}});
}

CodeSpec nonbinary_svt(std::size_t n, std::uint32_t r, std::int64_t m, std::int64_t a,
                       std::int64_t b, std::int64_t c) {
  require(m >= 1 && r >= 1, "m and r must be positive");
  require_in_range(a, m, "a");
  require_in_range(b, 2, "b");
  require_in_range(c, r, "c");
  return CodeSpec(n, r,
                  {{Statistic::gamma(), m, a},
                   {Statistic::delta(), 2, b},
                   {Statistic::sigma(), static_cast<std::int64_t>(r), c}});
}

CodeSpec le_nguyen(std::size_t n, std::uint32_t r, std::int64_t t, std::int64_t a) {
  require(r >= 1, "r must be positive");
  auto g = weight_sequence(t, r, n + 1);
  const std::int64_t m = g.back();
  g.pop_back();
  require_in_range(a, m, "a");
  return CodeSpec(n, r, {{Statistic::linear(std::move(g)), m, a}});
}

CodeSpec helberg(std::size_t n, std::int64_t t, std::int64_t a) { return le_nguyen(n, 2, t, a); }

CodeSpec ternary_integer(std::size_t n, std::int64_t a) {
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = pow2(static_cast<std::int64_t>(i) + 1) - 1;
  const std::int64_t m = pow2(static_cast<std::int64_t>(n) + 1) + 1;
  require_in_range(a, m, "a");
  return CodeSpec(n, 3, {{Statistic::linear(std::move(h)), m, a}});
}

CodeSpec odd_coefficient(std::size_t n, std::int64_t m, std::int64_t a) {
  require(m >= 1, "m must be positive");
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = 2 * static_cast<std::int64_t>(i) + 1;
  require_in_range(a, 2 * m, "a");
  return CodeSpec(n, 2, {{Statistic::linear(std::move(h)), 2 * m, a}});
}

CodeSpec an_code(std::int64_t p, std::int64_t a) {
  require(p >= 2 && numtheory::factorize(p).factors.size() == 1 &&
              numtheory::factorize(p).factors[0].second == 1,
          "AN code modulus must be prime");
  std::vector<std::int64_t> h(static_cast<std::size_t>(p - 1));
  for (std::int64_t i = 0; i < p - 1; ++i) h[static_cast<std::size_t>(i)] = pow2(i);
  require_in_range(a, p, "a");
  const std::size_t n = h.size();
  return CodeSpec(n, 2, {{Statistic::linear(std::move(h)), p, a}});
}

CodeSpec exponential_coefficient(std::size_t n, std::int64_t m, std::int64_t a) {
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = pow2(static_cast<std::int64_t>(i));
  const std::int64_t mod = pow2(m) + 1;
  require_in_range(a, mod, "a");
  return CodeSpec(n, 2, {{Statistic::linear(std::move(h)), mod, a}});
}

CodeSpec lc(std::size_t n, std::int64_t m, std::uint32_t r, std::vector<std::int64_t> h, std::int64_t a) {
  require(m >= 1, "m must be positive");
  require(h.size() == n, "h must have length n");
  require_in_range(a, m, "a");
  return CodeSpec(n, r, {{Statistic::linear(std::move(h)), m, a}});
}

CodeSpec blc(std::size_t n, std::int64_t m, std::vector<std::int64_t> h, std::int64_t a) {
  return lc(n, m, 2, std::move(h), a);
}

CodeSpec linear_code(std::uint32_t r, const std::vector<std::vector<std::int64_t>>& H) {
  require(r >= 1, "r must be positive");
  require(!H.empty() && !H[0].empty(), "parity-check matrix must be non-empty");
  const std::size_t n = H[0].size();
  std::vector<Constraint> cs;
  for (const auto& row : H) {
    require(row.size() == n, "parity-check rows must have equal length");
    std::vector<std::int64_t> h(n);
    for (std::size_t j = 0; j < n; ++j) h[j] = numtheory::mod(row[j], r);
    cs.push_back({Statistic::linear(std::move(h)), static_cast<std::int64_t>(r), 0});
  }
  return CodeSpec(n, r, std::move(cs));
}

}  // namespace ntcodes::codes
