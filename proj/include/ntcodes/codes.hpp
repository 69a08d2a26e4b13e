#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace ntcodes::codes {

using Symbol = std::uint32_t;

/// Word over the alphabet [r] = {0, ..., r-1}.
struct Word {
  std::vector<Symbol> symbols;
  std::uint32_t alphabet = 2;

  std::size_t length() const { return symbols.size(); }
  /// Symbols as digits, e.g. "012". Symbols >= 10 are comma-separated.
  std::string to_string() const;
  Word reversed() const;
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

Word parse_word(const std::string& digits, std::uint32_t alphabet);

enum class StatKind { Omega, Sigma, GammaGt, GammaGe, LambdaLt, LambdaLe, Delta, Linear, Custom };

/// A codeword statistic rho: [r]^n -> Z. Closed set of kinds so the
/// enumerator engine can recognize structure; Custom only supports
/// brute-force paths.
class Statistic {
 public:
  using CustomFn = std::function<std::int64_t(std::span<const Symbol>)>;

  static Statistic omega() { return Statistic(StatKind::Omega); }
  static Statistic sigma() { return Statistic(StatKind::Sigma); }
  static Statistic gamma() { return Statistic(StatKind::GammaGt); }
  static Statistic gamma_ge() { return Statistic(StatKind::GammaGe); }
  static Statistic lambda_lt() { return Statistic(StatKind::LambdaLt); }
  static Statistic lambda_le() { return Statistic(StatKind::LambdaLe); }
  static Statistic delta() { return Statistic(StatKind::Delta); }
  /// l_h(x) = sum h_i x_i; weights must be non-negative.
  static Statistic linear(std::vector<std::int64_t> weights);
  static Statistic custom(std::string name, CustomFn fn);

  StatKind kind() const { return kind_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::string& name() const { return name_; }

  bool is_linear() const;
  bool is_descent_type() const;
  /// Weight vector for length n; only for linear kinds (Omega, Sigma, Linear).
  std::vector<std::int64_t> linear_weights(std::size_t n) const;

  std::int64_t evaluate(std::span<const Symbol> x) const;
  std::int64_t operator()(const Word& w) const { return evaluate(w.symbols); }

  bool operator==(const Statistic& other) const;

 private:
  explicit Statistic(StatKind k);
  StatKind kind_;
  std::vector<std::int64_t> weights_;
  std::string name_;
  std::shared_ptr<const CustomFn> custom_;
};

struct Constraint {
  Statistic stat;
  std::int64_t modulus;
  std::int64_t residue;
};

/// Simultaneous congruence system rho_i(x) = a_i (mod m_i) over [r]^n.
class CodeSpec {
 public:
  /// Residues are reduced into [0, m_i); moduli must be positive.
  CodeSpec(std::size_t n, std::uint32_t r, std::vector<Constraint> constraints);

  std::size_t length() const { return n_; }
  std::uint32_t alphabet() const { return r_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::vector<Statistic> statistics() const;

  bool contains(std::span<const Symbol> x) const;
  bool is_member(const Word& x) const;

  nlohmann::json to_json() const;
  static CodeSpec from_json(const nlohmann::json& j);

 private:
  std::size_t n_;
  std::uint32_t r_;
  std::vector<Constraint> constraints_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Enumeration budget: CODES_BUDGET if set and valid, else kDefaultBudget.
std::uint64_t default_budget();

/// r^n, or nullopt when it exceeds 2^64 - 1.
std::optional<std::uint64_t> space_size(std::size_t n, std::uint32_t r);

/// Throws BudgetExceeded unless r^n <= budget.
void check_budget(std::size_t n, std::uint32_t r, std::uint64_t budget);

/// Visits every word of [r]^n in lexicographic order.
void for_each_word(std::size_t n, std::uint32_t r, std::uint64_t budget,
                   const std::function<void(std::span<const Symbol>)>& visit);

/// Members of the code in lexicographic order.
std::vector<Word> enumerate_codewords(const CodeSpec& spec, std::uint64_t budget = default_budget());

/// Recursive sequence g_i = 1 + (r-1) sum_{j=1..t} g_{i-j} [i-j >= 1], i = 1..length.
std::vector<std::int64_t> weight_sequence(std::int64_t t, std::int64_t r, std::size_t length);

enum class Variant { Gt, Ge, Lt, Le };

Variant parse_variant(const std::string& s);
std::string variant_name(Variant v);
Statistic descent_statistic(Variant v);

// Named families. Each validates parameter ranges and throws
// std::invalid_argument on violation.
CodeSpec binary_vt(std::size_t n, std::int64_t a);
CodeSpec levenshtein(std::size_t n, std::int64_t m, std::int64_t a);
CodeSpec tenengolts(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2,
                    Variant variant = Variant::Gt);
CodeSpec shifted_vt(std::size_t n, std::int64_t m, std::int64_t a, std::int64_t parity);
CodeSpec han_vinck_morita(std::size_t n, std::int64_t a, std::int64_t b);
CodeSpec nonbinary_svt(std::size_t n, std::uint32_t r, std::int64_t m, std::int64_t a,
                       std::int64_t b, std::int64_t c);
CodeSpec helberg(std::size_t n, std::int64_t t, std::int64_t a);
CodeSpec le_nguyen(std::size_t n, std::uint32_t r, std::int64_t t, std::int64_t a);
CodeSpec ternary_integer(std::size_t n, std::int64_t a);
CodeSpec odd_coefficient(std::size_t n, std::int64_t m, std::int64_t a);
CodeSpec an_code(std::int64_t p, std::int64_t a);
CodeSpec exponential_coefficient(std::size_t n, std::int64_t m, std::int64_t a);
CodeSpec lc(std::size_t n, std::int64_t m, std::uint32_t r, std::vector<std::int64_t> h, std::int64_t a);
CodeSpec blc(std::size_t n, std::int64_t m, std::vector<std::int64_t> h, std::int64_t a);
/// {x : H x^T = 0 over Z_r}; entries are reduced mod r.
CodeSpec linear_code(std::uint32_t r, const std::vector<std::vector<std::int64_t>>& H);

}  // namespace ntcodes::codes
