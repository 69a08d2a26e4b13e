#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ntcodes/bigint.hpp"
#include "ntcodes/codes.hpp"
#include "ntcodes/multipoly.hpp"

namespace ntcodes::enumerators {

enum class EnumeratorKind { Extended, Complete, Hamming };
enum class Method { Oracle, CharacterSum, ClosedForm };

std::string kind_name(EnumeratorKind k);
std::string method_name(Method m);
EnumeratorKind parse_kind(const std::string& s);

/// "z1".."zs" and "w0".."w{r-1}".
std::string z_var(std::size_t i);
std::string w_var(std::size_t j);
std::vector<std::string> extended_variables(std::size_t s, std::uint32_t r);
std::vector<std::string> complete_variables(std::uint32_t r);

/// A weight enumerator together with where it came from.
///
/// Extended enumerators use z1..zs (one per constraint, exponent = raw
/// statistic value) and w0..w{r-1} (symbol counts); complete enumerators use
/// only the w's; Hamming enumerators use the single variable w.
struct Enumerator {
  EnumeratorKind kind;
  IntPoly poly;
  std::optional<codes::CodeSpec> spec;
  Method method;

  BigInt cardinality() const { return evaluate_at_ones(poly); }

  /// {"kind", "variables", "terms":[{"exp","coef"}], "cardinality", "method"}
  nlohmann::json to_json() const;
  static Enumerator from_json(const nlohmann::json& j);
};

/// Number of character-sum coefficients that passed the integrality and
/// divisibility checks since process start.
std::uint64_t integrality_checks();

/// Extended enumerator of an explicit word set.
IntPoly extended_of_words(const std::vector<codes::Word>& words,
                          const std::vector<codes::Statistic>& stats, std::uint32_t r);

/// Brute-force extended enumerator of the code.
Enumerator oracle_extended(const codes::CodeSpec& spec,
                           std::uint64_t budget = codes::default_budget());

/// Extended -> Complete (z_i = 1) -> Hamming (w0 = 1, w_j = w).
Enumerator specialize(const Enumerator& e, EnumeratorKind target);

enum class FullSpaceMethod { ProductForm, MacMahon, BruteForce };

struct FullSpace {
  IntPoly poly;
  FullSpaceMethod method;
};

/// Extended enumerator of the whole space [r]^n for the given statistics.
///
/// Linear statistics (omega, sigma, l_h) use the product form
/// prod_j sum_k w_k prod_i z_i^{h_{i,j} k}. A single descent-type statistic,
/// optionally paired with sigma, uses the sum over symbol-count compositions
/// of q-multinomial coefficients. Anything else is enumerated.
FullSpace full_space_enumerator(std::size_t n, std::uint32_t r,
                                const std::vector<codes::Statistic>& stats,
                                std::uint64_t budget = codes::default_budget());

struct CharacterSumOptions {
  std::uint64_t budget = codes::default_budget();
  /// When the full-space polynomial had to be enumerated anyway, select the
  /// residue classes directly instead of running the character sum.
  bool allow_filter_fast_path = true;
};

/// Extended enumerator of an SC code from the full-space enumerator by the
/// character sum over u in [m_1] x ... x [m_s]:
///   W(C) = sum_u prod_i (1/m_i) e(-a_i u_i / m_i) W([r]^n; z e(u/m), w).
Enumerator character_sum_extended(const codes::CodeSpec& spec, const CharacterSumOptions& options = {});

/// Hamming enumerator of LC_a(n, m, r, h):
///   (1/m) sum_u e(-a u/m) prod_j (1 + w sum_{k=1}^{r-1} e(h_j k u / m)).
Enumerator lc_hamming(std::size_t n, std::int64_t m, std::uint32_t r,
                      const std::vector<std::int64_t>& h, std::int64_t a);
Enumerator blc_hamming(std::size_t n, std::int64_t m, const std::vector<std::int64_t>& h,
                       std::int64_t a);

struct VariantTransform {
  std::int64_t base_a1;
  /// The variant code is the reversal of the base code (as opposed to equal).
  bool reversed;
};

/// Base Tenengolts parameter whose code has the same Hamming enumerator as
/// the given variant.
VariantTransform tenengolts_variant_transform(codes::Variant variant, std::size_t n, std::int64_t a1);

/// Hamming enumerator of the r-ary Tenengolts code:
///   (1/nr) sum_{d|n} sum_{e|r} c_d(a1) c_e(a2) (1 - w^d + r w^d [e|d])^{n/d}.
/// Non-base variants are mapped through tenengolts_variant_transform.
Enumerator tenengolts_hamming(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2,
                              codes::Variant variant = codes::Variant::Gt);

/// (1/nr) sum_{d|n} c_d(a1) r^{n/d} (r,d) [(r,d) | a2]
BigInt tenengolts_cardinality(std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2,
                              codes::Variant variant = codes::Variant::Gt);

/// Hamming specialization of the full-space (gamma, sigma) enumerator at
/// z = (e(u1/n), e(u2/r)):
///   (1 - w^{n/g} + r w^{n/g} [r | n u2 / g])^g, g = (n, u1).
IntPoly tenengolts_full_space_hamming_at(std::size_t n, std::uint32_t r, std::int64_t u1,
                                         std::int64_t u2);

/// Every (a1, a2) in [n] x [r] attaining the largest cardinality, sorted.
std::vector<std::pair<std::int64_t, std::int64_t>> argmax_cardinality(
    std::size_t n, std::uint32_t r, codes::Variant variant = codes::Variant::Gt);

}  // namespace ntcodes::enumerators
