#include "ntcodes/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ntcodes/codes.hpp"
#include "ntcodes/enumerators.hpp"
#include "ntcodes/errors.hpp"
#include "ntcodes/macwilliams.hpp"
#include "ntcodes/sweeps.hpp"

namespace ntcodes::cli {

namespace {

using codes::CodeSpec;
using enumerators::Enumerator;
using enumerators::EnumeratorKind;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilyArgs {
  std::string family;
  std::optional<std::int64_t> n, r, a1, a2, m, a, t, parity, b, c, p;
  std::string variant = "gt";
  std::string h, H, spec;
};

struct Common {
  std::string format = "text";
  std::string method = "auto";
  std::optional<std::uint64_t> budget;

  std::uint64_t effective_budget() const { return budget ? *budget : codes::default_budget(); }
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError("family '" + family + "' requires --" + std::string(flag));
  return *v;
}

std::vector<std::int64_t> parse_list(const std::string& s, const char* flag) {
  if (s.empty()) throw UsageError(std::string("missing --") + flag);
  return macwilliams::parse_matrix(s).at(0);
}

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("family", fa.family,
                  "tenengolts | vt | levenshtein | shifted-vt | han-vinck-morita | nonbinary-svt | "
                  "helberg | le-nguyen | ternary-integer | odd-coefficient | an | "
                  "exponential-coefficient | lc | blc | linear | spec")
      ->required();
  cmd->add_option("--n", fa.n, "code length");
  cmd->add_option("--r", fa.r, "alphabet size");
  cmd->add_option("--a1", fa.a1, "descent residue (Tenengolts)");
  cmd->add_option("--a2", fa.a2, "symbol-sum residue (Tenengolts)");
  cmd->add_option("--variant", fa.variant, "Tenengolts variant: gt, ge, lt, le");
  cmd->add_option("--m", fa.m, "modulus");
  cmd->add_option("--a", fa.a, "residue");
  cmd->add_option("--t", fa.t, "weight-sequence depth (Helberg, Le-Nguyen)");
  cmd->add_option("--parity", fa.parity, "parity residue (shifted VT)");
  cmd->add_option("--b", fa.b, "second residue");
  cmd->add_option("--c", fa.c, "third residue");
  cmd->add_option("--p", fa.p, "prime modulus (AN code)");
  cmd->add_option("--h", fa.h, "comma-separated weights");
  cmd->add_option("--H", fa.H, "parity-check matrix, rows ';'-separated");
  cmd->add_option("--spec", fa.spec, "code spec JSON, or @path to a JSON file");
}

void add_common_options(CLI::App* cmd, Common& co, bool with_method) {
  cmd->add_option("--format", co.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  if (with_method) {
    cmd->add_option("--method", co.method, "auto | formula | oracle")
        ->check(CLI::IsMember({"auto", "formula", "oracle"}));
  }
  cmd->add_option("--budget", co.budget, "maximum number of words to enumerate");
}

CodeSpec build_spec(const FamilyArgs& fa) {
  const std::string& f = fa.family;
  auto n = [&] { return static_cast<std::size_t>(need(fa.n, "n", f)); };
  auto r = [&] { return static_cast<std::uint32_t>(need(fa.r, "r", f)); };
  if (f == "tenengolts") {
    return codes::tenengolts(n(), r(), need(fa.a1, "a1", f), need(fa.a2, "a2", f),
                             codes::parse_variant(fa.variant));
  }
  if (f == "vt") return codes::binary_vt(n(), fa.a.value_or(0));
  if (f == "levenshtein") return codes::levenshtein(n(), need(fa.m, "m", f), need(fa.a, "a", f));
  if (f == "shifted-vt") {
    return codes::shifted_vt(n(), need(fa.m, "m", f), need(fa.a, "a", f), need(fa.parity, "parity", f));
  }
  if (f == "han-vinck-morita") return codes::han_vinck_morita(n(), need(fa.a, "a", f), need(fa.b, "b", f));
  if (f == "nonbinary-svt") {
    return codes::nonbinary_svt(n(), r(), need(fa.m, "m", f), need(fa.a, "a", f), need(fa.b, "b", f),
                                need(fa.c, "c", f));
  }
  if (f == "helberg") return codes::helberg(n(), need(fa.t, "t", f), need(fa.a, "a", f));
  if (f == "le-nguyen") return codes::le_nguyen(n(), r(), need(fa.t, "t", f), need(fa.a, "a", f));
  if (f == "ternary-integer") return codes::ternary_integer(n(), need(fa.a, "a", f));
  if (f == "odd-coefficient") return codes::odd_coefficient(n(), need(fa.m, "m", f), need(fa.a, "a", f));
  if (f == "an") return codes::an_code(need(fa.p, "p", f), need(fa.a, "a", f));
  if (f == "exponential-coefficient") {
    return codes::exponential_coefficient(n(), need(fa.m, "m", f), need(fa.a, "a", f));
  }
  if (f == "lc") return codes::lc(n(), need(fa.m, "m", f), r(), parse_list(fa.h, "h"), need(fa.a, "a", f));
  if (f == "blc") return codes::blc(n(), need(fa.m, "m", f), parse_list(fa.h, "h"), need(fa.a, "a", f));
  if (f == "linear") {
    if (fa.H.empty()) throw UsageError("family 'linear' requires --H");
    return codes::linear_code(r(), macwilliams::parse_matrix(fa.H));
  }
  if (f == "spec") {
    if (fa.spec.empty()) throw UsageError("family 'spec' requires --spec");
    std::string text = fa.spec;
    if (text[0] == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw UsageError("cannot open " + text.substr(1));
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return CodeSpec::from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("invalid --spec JSON: ") + e.what());
    }
  }
  throw UsageError("unknown family '" + f + "'");
}

/// Single linear congruence: eligible for the LC Hamming character sum.
bool single_linear(const CodeSpec& spec) {
  return spec.num_constraints() == 1 && spec.constraints()[0].stat.is_linear();
}

Enumerator compute_enumerator(const FamilyArgs& fa, const Common& co, EnumeratorKind kind) {
  const CodeSpec spec = build_spec(fa);
  if (co.method == "oracle") {
    return enumerators::specialize(enumerators::oracle_extended(spec, co.effective_budget()), kind);
  }
  if (kind == EnumeratorKind::Hamming) {
    if (fa.family == "tenengolts") {
      return enumerators::tenengolts_hamming(spec.length(), spec.alphabet(), *fa.a1, *fa.a2,
                                             codes::parse_variant(fa.variant));
    }
    if (single_linear(spec)) {
      const auto& c = spec.constraints()[0];
      return enumerators::lc_hamming(spec.length(), c.modulus, spec.alphabet(),
                                     c.stat.linear_weights(spec.length()), c.residue);
    }
  }
  enumerators::CharacterSumOptions opts;
  opts.budget = co.effective_budget();
  opts.allow_filter_fast_path = co.method == "auto";
  return enumerators::specialize(enumerators::character_sum_extended(spec, opts), kind);
}

void print_enumerator(const Enumerator& e, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << e.to_json().dump() << '\n';
  } else if (format == "csv") {
    for (const auto& v : e.poly.variables()) out << v << ',';
    out << "coef\n";
    for (const auto& [m, c] : e.poly.terms()) {
      for (auto x : m) out << x << ',';
      out << c.str() << '\n';
    }
  } else {
    out << to_text(e.poly) << '\n';
  }
}

void print_scalar(const std::string& name, const BigInt& v, const std::string& format,
                  std::ostream& out) {
  if (format == "json") {
    out << nlohmann::json{{name, v.str()}}.dump() << '\n';
  } else if (format == "csv") {
    out << name << '\n' << v.str() << '\n';
  } else {
    out << v.str() << '\n';
  }
}

BigInt compute_cardinality(const FamilyArgs& fa, const Common& co) {
  if (fa.family == "tenengolts" && co.method != "oracle") {
    build_spec(fa);  // parameter validation
    return enumerators::tenengolts_cardinality(static_cast<std::size_t>(*fa.n),
                                               static_cast<std::uint32_t>(*fa.r), *fa.a1, *fa.a2,
                                               codes::parse_variant(fa.variant));
  }
  return compute_enumerator(fa, co, EnumeratorKind::Hamming).cardinality();
}

std::string word_set(const std::vector<codes::Word>& words) {
  std::string s = "{";
  for (std::size_t i = 0; i < words.size(); ++i) s += (i ? ", " : "") + words[i].to_string();
  return s + "}";
}

int run_table(const std::string& which, const std::string& format, std::ostream& out) {
  using codes::Variant;
  nlohmann::json j;
  std::ostringstream text;
  if (which == "t33") {
    text << "Codewords of T_{a1,a2}(3,3)\n"
         << "a1\\a2 | 0 | 1 | 2\n";
    std::ostringstream cards;
    cards << "Cardinalities |T_{a1,a2}(3,3)|\n"
          << "a1\\a2 | 0 | 1 | 2\n";
    for (std::int64_t a1 = 0; a1 < 3; ++a1) {
      text << a1;
      cards << a1;
      for (std::int64_t a2 = 0; a2 < 3; ++a2) {
        const auto words = codes::enumerate_codewords(codes::tenengolts(3, 3, a1, a2));
        const auto card = enumerators::tenengolts_cardinality(3, 3, a1, a2);
        text << " | " << word_set(words);
        cards << " | " << card.str();
        nlohmann::json cw = nlohmann::json::array();
        for (const auto& w : words) cw.push_back(w.to_string());
        j["cells"].push_back({{"a1", a1}, {"a2", a2}, {"codewords", cw}, {"cardinality", card.str()}});
      }
      text << '\n';
      cards << '\n';
    }
    text << '\n' << cards.str();
  } else if (which == "t23") {
    const Variant variants[] = {Variant::Gt, Variant::Ge, Variant::Lt, Variant::Le};
    text << "Codewords of T_{a1,a2}(2,3) and variants\n"
         << "<a1,a2> | T | T(>=) | T(<) | T(<=)\n";
    for (std::int64_t a1 = 0; a1 < 2; ++a1) {
      for (std::int64_t a2 = 0; a2 < 3; ++a2) {
        text << '<' << a1 << ',' << a2 << '>';
        nlohmann::json row{{"a1", a1}, {"a2", a2}};
        for (Variant v : variants) {
          const auto words = codes::enumerate_codewords(codes::tenengolts(2, 3, a1, a2, v));
          text << " | " << word_set(words);
          nlohmann::json cw = nlohmann::json::array();
          for (const auto& w : words) cw.push_back(w.to_string());
          row[codes::variant_name(v)] = cw;
        }
        text << '\n';
        j["rows"].push_back(row);
      }
    }
  } else if (which == "t33-extended") {
    const CodeSpec spec = codes::tenengolts(3, 3, 0, 0);
    const auto stats = spec.statistics();
    text << "Codewords of T_{0,0}(3,3) with gamma, sigma and symbol counts\n"
         << "x | gamma | sigma | tau0 | tau1 | tau2 | monomial\n";
    for (const auto& w : codes::enumerate_codewords(spec)) {
      const IntPoly mono = enumerators::extended_of_words({w}, stats, 3);
      std::int64_t tau[3] = {0, 0, 0};
      for (auto s : w.symbols) ++tau[s];
      text << w.to_string() << " | " << stats[0](w) << " | " << stats[1](w) << " | " << tau[0]
           << " | " << tau[1] << " | " << tau[2] << " | " << to_text(mono) << '\n';
      j["rows"].push_back({{"x", w.to_string()}, {"gamma", stats[0](w)}, {"sigma", stats[1](w)},
                           {"tau", {tau[0], tau[1], tau[2]}}, {"monomial", to_text(mono)}});
    }
    const auto ext = enumerators::character_sum_extended(spec);
    const auto comp = enumerators::specialize(ext, EnumeratorKind::Complete);
    const auto ham = enumerators::specialize(ext, EnumeratorKind::Hamming);
    text << "\nextended: " << to_text(ext.poly) << "\ncomplete: " << to_text(comp.poly)
         << "\nhamming:  " << to_text(ham.poly) << '\n';
    j["extended"] = to_text(ext.poly);
    j["complete"] = to_text(comp.poly);
    j["hamming"] = to_text(ham.poly);
  } else {
    throw UsageError("unknown table '" + which + "' (expected t33, t23 or t33-extended)");
  }
  if (format == "json") out << j.dump() << '\n';
  else out << text.str();
  return kExitOk;
}

int run_verify(const std::string& family, std::size_t max_n, std::uint32_t max_r, std::uint64_t seed,
               std::size_t count, std::ostream& out) {
  sweeps::SweepResult res;
  const bool all = family == "all";
  if (all || family == "tenengolts") res.merge(sweeps::tenengolts_sweep(max_n, max_r));
  if (all || family == "lc") res.merge(sweeps::lc_sweep(seed, count));
  if (all || family == "sc") res.merge(sweeps::sc_sweep(seed, count));
  if (all || family == "svt") res.merge(sweeps::family_sweep(seed, count));
  if (all || family == "macwilliams") res.merge(sweeps::macwilliams_sweep(seed, count));
  for (const auto& line : res.log) out << line << '\n';
  out << "checked " << res.checked << ", mismatches " << res.mismatches << '\n';
  return res.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight enumerators and cardinalities of number-theoretic codes", "ntcodes"};
  // --h is the LC weight vector, so help is long-form only.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  FamilyArgs fa;
  Common co;

  auto* card = app.add_subcommand("card", "cardinality of a code");
  add_family_options(card, fa);
  add_common_options(card, co, true);

  std::string kind = "hamming";
  auto* enumc = app.add_subcommand("enum", "weight enumerator of a code");
  add_family_options(enumc, fa);
  add_common_options(enumc, co, true);
  enumc->add_option("--kind", kind, "extended | complete | hamming")
      ->check(CLI::IsMember({"extended", "complete", "hamming"}));

  std::string vfamily = "tenengolts";
  std::size_t max_n = 5, count = 20;
  std::uint32_t max_r = 3;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "compare closed forms with enumeration");
  verify->add_option("--family", vfamily, "tenengolts | lc | sc | svt | macwilliams | all")
      ->check(CLI::IsMember({"tenengolts", "lc", "sc", "svt", "macwilliams", "all"}));
  verify->add_option("--max-n", max_n, "largest length in the Tenengolts sweep");
  verify->add_option("--max-r", max_r, "largest alphabet in the Tenengolts sweep");
  verify->add_option("--seed", seed, "seed for random instances");
  verify->add_option("--count", count, "number of random instances");

  std::string table_name;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "reproduce the reference codeword tables");
  table->add_option("name", table_name, "t33 | t23 | t33-extended")->required();
  table->add_option("--format", table_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::int64_t mw_r = 2;
  std::string mw_H;
  std::string mw_format = "json";
  std::optional<std::uint64_t> mw_budget;
  auto* mw = app.add_subcommand("macwilliams", "check the MacWilliams identity for a Z_r code");
  mw->add_option("--r", mw_r, "modulus")->required();
  mw->add_option("--H", mw_H, "parity-check matrix, e.g. \"1,1;0,1\"")->required();
  mw->add_option("--format", mw_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  mw->add_option("--budget", mw_budget, "maximum number of words to enumerate");

  std::vector<std::string> storage{"ntcodes"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*card) {
      print_scalar("cardinality", compute_cardinality(fa, co), co.format, out);
    } else if (*enumc) {
      print_enumerator(compute_enumerator(fa, co, enumerators::parse_kind(kind)), co.format, out);
    } else if (*verify) {
      return run_verify(vfamily, max_n, max_r, seed, count, out);
    } else if (*table) {
      return run_table(table_name, table_format, out);
    } else if (*mw) {
      if (mw_r < 1) throw UsageError("--r must be positive");
      const auto code = macwilliams::build_code(static_cast<std::uint32_t>(mw_r),
                                                macwilliams::parse_matrix(mw_H),
                                                mw_budget ? *mw_budget : codes::default_budget());
      const auto report = macwilliams::verify_macwilliams(code);
      if (mw_format == "json") {
        out << report.to_json().dump() << '\n';
      } else {
        out << "left:      " << to_text(report.left) << '\n'
            << "right:     " << (report.right ? to_text(*report.right) : "(skipped)") << '\n'
            << "dual_size: " << report.dual_size << '\n'
            << "verified:  " << (report.verified ? "true" : "false") << '\n';
        if (!report.note.empty()) out << "note:      " << report.note << '\n';
      }
      return report.verified || !report.full_rank ? kExitOk : kExitMismatch;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget or CODES_BUDGET)\n";
    return kExitBudget;
  } catch (const NotAnInteger& e) {
    err << "internal integrality violation: " << e.what() << '\n';
    return kExitIntegrality;
  } catch (const NonDivisible& e) {
    err << "internal integrality violation: " << e.what() << '\n';
    return kExitIntegrality;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ntcodes::cli
