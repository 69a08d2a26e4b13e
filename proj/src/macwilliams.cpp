#include "ntcodes/macwilliams.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "ntcodes/cyclotomic.hpp"
#include "ntcodes/enumerators.hpp"
#include "ntcodes/errors.hpp"
#include "ntcodes/numtheory.hpp"

namespace ntcodes::macwilliams {

using codes::Symbol;
using codes::Word;

Matrix parse_matrix(const std::string& text) {
  Matrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<std::int64_t> entries;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      try {
        entries.push_back(std::stoll(cell, &used));
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_matrix: bad entry '" + cell + "'");
      }
      for (std::size_t i = used; i < cell.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(cell[i]))) {
          throw std::invalid_argument("parse_matrix: bad entry '" + cell + "'");
        }
      }
    }
    if (entries.empty()) throw std::invalid_argument("parse_matrix: empty row");
    if (!m.empty() && entries.size() != m[0].size()) {
      throw std::invalid_argument("parse_matrix: rows have different lengths");
    }
    m.push_back(std::move(entries));
  }
  if (m.empty()) throw std::invalid_argument("parse_matrix: empty matrix");
  return m;
}

ZrLinearCode build_code(std::uint32_t r, const Matrix& H, std::uint64_t budget) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (H.empty() || H[0].empty()) throw std::invalid_argument("parity-check matrix must be non-empty");
  ZrLinearCode code{r, H[0].size(), {}, {}, {}};
  for (const auto& row : H) {
    if (row.size() != code.n) throw std::invalid_argument("parity-check rows must have equal length");
    std::vector<std::int64_t> reduced(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) reduced[j] = numtheory::mod(row[j], r);
    code.H.push_back(std::move(reduced));
  }
  const std::size_t s = code.H.size();

  codes::for_each_word(code.n, r, budget, [&](std::span<const Symbol> x) {
    for (const auto& row : code.H) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < code.n; ++j) acc += row[j] * x[j];
      if (acc % r != 0) return;
    }
    code.codewords.push_back(Word{{x.begin(), x.end()}, r});
  });

  std::set<Word> span;
  codes::for_each_word(s, r, budget, [&](std::span<const Symbol> u) {
    Word y{std::vector<Symbol>(code.n, 0), r};
    for (std::size_t j = 0; j < code.n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < s; ++i) acc += static_cast<std::int64_t>(u[i]) * code.H[i][j];
      y.symbols[j] = static_cast<Symbol>(acc % r);
    }
    span.insert(std::move(y));
  });
  code.dual.assign(span.begin(), span.end());
  return code;
}

IntPoly complete_weight_enumerator(const std::vector<Word>& words, std::uint32_t r) {
  return enumerators::extended_of_words(words, {}, r);
}

nlohmann::json Report::to_json() const {
  return {{"left", to_text(left)},
          {"right", right ? nlohmann::json(to_text(*right)) : nlohmann::json(nullptr)},
          {"verified", verified},
          {"dual_size", dual_size}};
}

Report verify_macwilliams(const ZrLinearCode& code) {
  const std::uint32_t r = code.r;
  const auto order = static_cast<std::int64_t>(r);
  Report report;
  report.left = complete_weight_enumerator(code.codewords, r);
  report.dual_size = code.dual.size();

  BigInt expected_dual = 1;
  for (std::size_t i = 0; i < code.rows(); ++i) expected_dual *= r;
  report.full_rank = BigInt(code.dual.size()) == expected_dual;
  if (!report.full_rank) {
    report.note = "parity-check matrix is not full rank over Z_" + std::to_string(r) + ": |dual| = " +
                  std::to_string(code.dual.size()) + " != r^s = " + expected_dual.str();
    return report;
  }

  using CycPoly = MultiPoly<CycElement>;
  const auto vars = enumerators::complete_variables(r);
  const CycElement one(order, 1);

  // v_i = sum_k w_k zeta_r^{ik}
  std::vector<CycPoly> v;
  for (std::uint32_t i = 0; i < r; ++i) {
    CycPoly vi(vars);
    for (std::uint32_t k = 0; k < r; ++k) {
      Monomial m(r, 0);
      m[k] = 1;
      vi.add_term(m, CycElement::root(order, static_cast<std::int64_t>(i) * k));
    }
    v.push_back(std::move(vi));
  }

  const IntPoly dual_enum = complete_weight_enumerator(code.dual, r);
  CycPoly total(vars);
  for (const auto& [tau, c] : dual_enum.terms()) {
    CycPoly product = CycPoly::constant(one * c, vars);
    for (std::uint32_t i = 0; i < r; ++i) {
      if (tau[i] > 0) product = product * v[i].pow(tau[i], one);
    }
    total += product;
  }

  IntPoly right(vars);
  for (const auto& [m, c] : total.terms()) {
    const BigInt value = c.to_integer();
    BigInt q, rem;
    boost::multiprecision::divide_qr(value, expected_dual, q, rem);
    if (!rem.is_zero() || value < 0) {
      throw NonDivisible("verify_macwilliams: coefficient " + value.str() +
                         " is not a non-negative multiple of " + expected_dual.str());
    }
    right.add_term(m, q);
  }
  report.verified = right == report.left;
  report.right = std::move(right);
  return report;
}

}  // namespace ntcodes::macwilliams
