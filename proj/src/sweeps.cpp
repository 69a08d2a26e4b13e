#include "ntcodes/sweeps.hpp"

#include <set>
#include <sstream>

#include "ntcodes/enumerators.hpp"
#include "ntcodes/multipoly.hpp"

namespace ntcodes::sweeps {

using codes::CodeSpec;
using codes::Variant;
using enumerators::EnumeratorKind;
using enumerators::specialize;

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void record(SweepResult& res, bool ok, const std::string& what) {
  ++res.checked;
  if (!ok) ++res.mismatches;
  res.log.push_back(what + (ok ? " ok" : " MISMATCH"));
}

std::string describe(const CodeSpec& spec) {
  std::ostringstream out;
  out << "n=" << spec.length() << " r=" << spec.alphabet() << " constraints=[";
  bool first = true;
  for (const auto& c : spec.constraints()) {
    if (!first) out << ' ';
    first = false;
    out << c.stat.name();
    if (c.stat.kind() == codes::StatKind::Linear) out << '(' << join(c.stat.weights()) << ')';
    out << " mod " << c.modulus << " = " << c.residue;
  }
  out << ']';
  return out.str();
}

}  // namespace

void SweepResult::merge(const SweepResult& other) {
  checked += other.checked;
  mismatches += other.mismatches;
  log.insert(log.end(), other.log.begin(), other.log.end());
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

LcInstance random_lc(Rng& rng, std::size_t max_n, std::int64_t max_m, std::uint32_t max_r) {
  LcInstance inst;
  inst.n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_n)));
  inst.m = rng.uniform(1, max_m);
  inst.r = static_cast<std::uint32_t>(rng.uniform(2, max_r));
  for (std::size_t j = 0; j < inst.n; ++j) inst.h.push_back(rng.uniform(0, 2 * inst.m));
  inst.a = rng.uniform(0, inst.m - 1);
  return inst;
}

CodeSpec random_sc(Rng& rng, std::size_t max_n, std::uint32_t max_r, std::int64_t max_m) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_n)));
  const auto r = static_cast<std::uint32_t>(rng.uniform(2, max_r));
  const auto s = static_cast<std::size_t>(rng.uniform(2, 3));
  const codes::Statistic pool[] = {codes::Statistic::omega(), codes::Statistic::sigma(),
                                   codes::Statistic::delta(), codes::Statistic::gamma()};
  std::vector<codes::Constraint> cs;
  for (std::size_t i = 0; i < s; ++i) {
    const std::int64_t m = rng.uniform(1, max_m);
    cs.push_back({pool[rng.uniform(0, 3)], m, rng.uniform(0, m - 1)});
  }
  return CodeSpec(n, r, std::move(cs));
}

macwilliams::Matrix random_full_rank(Rng& rng, std::uint32_t r, std::size_t n, std::size_t s) {
  while (true) {
    macwilliams::Matrix H(s, std::vector<std::int64_t>(n));
    for (auto& row : H) {
      for (auto& x : row) x = rng.uniform(0, r - 1);
    }
    // Row span size r^s means the rows are independent over Z_r.
    std::set<std::vector<std::int64_t>> span;
    std::vector<std::int64_t> u(s, 0);
    while (true) {
      std::vector<std::int64_t> y(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < s; ++i) y[j] += u[i] * H[i][j];
        y[j] %= r;
      }
      span.insert(std::move(y));
      std::size_t i = s;
      while (i > 0 && u[i - 1] + 1 == r) u[--i] = 0;
      if (i == 0) break;
      ++u[i - 1];
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < s; ++i) expected *= r;
    if (span.size() == expected) return H;
  }
}

SweepResult tenengolts_sweep(std::size_t max_n, std::uint32_t max_r) {
  SweepResult res;
  const Variant variants[] = {Variant::Gt, Variant::Ge, Variant::Lt, Variant::Le};
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::uint32_t r = 1; r <= max_r; ++r) {
      for (std::int64_t a1 = 0; a1 < static_cast<std::int64_t>(n); ++a1) {
        for (std::int64_t a2 = 0; a2 < static_cast<std::int64_t>(r); ++a2) {
          for (Variant v : variants) {
            const CodeSpec spec = codes::tenengolts(n, r, a1, a2, v);
            const auto oracle = enumerators::oracle_extended(spec);
            const auto oracle_ham = specialize(oracle, EnumeratorKind::Hamming);
            const auto closed = enumerators::tenengolts_hamming(n, r, a1, a2, v);
            const auto card = enumerators::tenengolts_cardinality(n, r, a1, a2, v);
            const auto engine = enumerators::character_sum_extended(spec);
            const bool ok = closed.poly == oracle_ham.poly && card == oracle.cardinality() &&
                            engine.poly == oracle.poly;
            record(res, ok,
                   "tenengolts n=" + std::to_string(n) + " r=" + std::to_string(r) +
                       " a1=" + std::to_string(a1) + " a2=" + std::to_string(a2) +
                       " variant=" + codes::variant_name(v) + " |T|=" + card.str());
          }
        }
      }
    }
  }
  return res;
}

SweepResult lc_sweep(std::uint64_t seed, std::size_t count, std::size_t max_n, std::int64_t max_m,
                     std::uint32_t max_r) {
  SweepResult res;
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    LcInstance inst = random_lc(rng, max_n, max_m, max_r);
    // Every other instance is binary.
    if (k % 2 == 1) inst.r = 2;
    const auto formula = enumerators::lc_hamming(inst.n, inst.m, inst.r, inst.h, inst.a);
    const auto oracle = specialize(
        enumerators::oracle_extended(codes::lc(inst.n, inst.m, inst.r, inst.h, inst.a)),
        EnumeratorKind::Hamming);
    record(res, formula.poly == oracle.poly,
           std::string(inst.r == 2 ? "blc" : "lc") + " n=" + std::to_string(inst.n) +
               " m=" + std::to_string(inst.m) + " r=" + std::to_string(inst.r) + " h=" +
               join(inst.h) + " a=" + std::to_string(inst.a));
  }
  return res;
}

SweepResult sc_sweep(std::uint64_t seed, std::size_t count, std::size_t max_n, std::uint32_t max_r,
                     std::int64_t max_m) {
  SweepResult res;
  Rng rng(seed);
  enumerators::CharacterSumOptions opts;
  opts.allow_filter_fast_path = false;
  for (std::size_t k = 0; k < count; ++k) {
    const CodeSpec spec = random_sc(rng, max_n, max_r, max_m);
    const auto engine = enumerators::character_sum_extended(spec, opts);
    const auto oracle = enumerators::oracle_extended(spec);
    record(res, engine.poly == oracle.poly, "sc " + describe(spec));
  }
  return res;
}

SweepResult family_sweep(std::uint64_t seed, std::size_t count) {
  SweepResult res;
  Rng rng(seed);
  enumerators::CharacterSumOptions opts;
  opts.allow_filter_fast_path = false;
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const std::int64_t m = rng.uniform(1, 12);
    CodeSpec spec = k % 2 == 0
                        ? codes::shifted_vt(n, m, rng.uniform(0, m - 1), rng.uniform(0, 1))
                        : [&] {
                            const auto nb = static_cast<std::size_t>(rng.uniform(1, 5));
                            const auto r = static_cast<std::uint32_t>(rng.uniform(2, 3));
                            return codes::nonbinary_svt(nb, r, m, rng.uniform(0, m - 1),
                                                        rng.uniform(0, 1), rng.uniform(0, r - 1));
                          }();
    const auto engine = enumerators::character_sum_extended(spec, opts);
    const auto oracle = enumerators::oracle_extended(spec);
    record(res, engine.poly == oracle.poly,
           std::string(k % 2 == 0 ? "shifted_vt " : "nonbinary_svt ") + describe(spec));
  }
  return res;
}

SweepResult macwilliams_sweep(std::uint64_t seed, std::size_t count, std::uint32_t max_r,
                              std::size_t max_n, std::size_t max_s) {
  SweepResult res;
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const auto r = static_cast<std::uint32_t>(rng.uniform(2, max_r));
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_n)));
    const auto s = static_cast<std::size_t>(
        rng.uniform(1, static_cast<std::int64_t>(std::min(max_s, n))));
    const auto H = random_full_rank(rng, r, n, s);
    const auto code = macwilliams::build_code(r, H);
    const auto report = macwilliams::verify_macwilliams(code);

    BigInt space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= r;
    const bool sizes = BigInt(code.codewords.size()) * code.dual.size() == space;

    const auto engine = specialize(enumerators::character_sum_extended(codes::linear_code(r, H)),
                                   EnumeratorKind::Complete);
    const bool cross = engine.poly == report.left;

    std::string h;
    for (std::size_t i = 0; i < H.size(); ++i) h += (i ? ";" : "") + join(H[i]);
    record(res, report.verified && sizes && cross,
           "macwilliams r=" + std::to_string(r) + " n=" + std::to_string(n) + " s=" +
               std::to_string(s) + " H=" + h + " |L|=" + std::to_string(code.codewords.size()) +
               " |dual|=" + std::to_string(code.dual.size()));
  }
  return res;
}

}  // namespace ntcodes::sweeps
