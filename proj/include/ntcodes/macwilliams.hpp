#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntcodes/codes.hpp"
#include "ntcodes/multipoly.hpp"

namespace ntcodes::macwilliams {

using Matrix = std::vector<std::vector<std::int64_t>>;

/// Parses "1,1;0,1" (rows separated by ';', entries by ',').
Matrix parse_matrix(const std::string& text);

/// Linear code over Z_r given by a parity-check matrix, with both the code
/// (kernel of H) and its dual (row span of H) materialized.
struct ZrLinearCode {
  std::uint32_t r;
  std::size_t n;
  Matrix H;
  std::vector<codes::Word> codewords;
  std::vector<codes::Word> dual;

  std::size_t rows() const { return H.size(); }
};

ZrLinearCode build_code(std::uint32_t r, const Matrix& H,
                        std::uint64_t budget = codes::default_budget());

/// sum over words of prod_j w_j^{tau_j(x)}
IntPoly complete_weight_enumerator(const std::vector<codes::Word>& words, std::uint32_t r);

struct Report {
  IntPoly left;
  std::optional<IntPoly> right;
  bool verified = false;
  bool full_rank = false;
  std::size_t dual_size = 0;
  std::string note;

  /// {"left", "right", "verified", "dual_size"}; right is null when skipped.
  nlohmann::json to_json() const;
};

/// Checks W(L; w) == r^{-s} W(L_perp; v) with v_i = sum_k w_k e(ik/r), expanding
/// the right side exactly over Z[zeta_r]. Rank-deficient H (|dual| != r^s)
/// is reported and the identity is skipped.
Report verify_macwilliams(const ZrLinearCode& code);

}  // namespace ntcodes::macwilliams
