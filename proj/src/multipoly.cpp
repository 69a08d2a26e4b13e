#include "ntcodes/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

#include "ntcodes/errors.hpp"

namespace ntcodes {

namespace {

struct VariableKey {
  int family;       // 0 z, 1 w, 2 q, 3 other
  long index;       // -1 for the bare name
  std::string name;

  auto tie() const { return std::tie(family, index, name); }
};

VariableKey key_of(const std::string& v) {
  if (v == "q") return {2, -1, v};
  if (!v.empty() && (v[0] == 'z' || v[0] == 'w')) {
    const int family = v[0] == 'z' ? 0 : 1;
    const std::string rest = v.substr(1);
    if (rest.empty()) return {family, -1, v};
    if (rest.size() < 10 && std::all_of(rest.begin(), rest.end(),
                                        [](unsigned char c) { return std::isdigit(c); })) {
      return {family, std::stol(rest), v};
    }
  }
  return {3, -1, v};
}

}  // namespace

bool variable_less(const std::string& a, const std::string& b) {
  return key_of(a).tie() < key_of(b).tie();
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), variable_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt evaluate_at_ones(const IntPoly& p) {
  BigInt s = 0;
  for (const auto& [m, c] : p.terms()) s += c;
  return s;
}

IntPoly divide_exact(const IntPoly& p, const BigInt& k) {
  if (k.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
  IntPoly out(p.variables());
  for (const auto& [m, c] : p.terms()) {
    BigInt q, r;
    boost::multiprecision::divide_qr(c, k, q, r);
    if (!r.is_zero()) {
      throw NonDivisible("divide_exact: coefficient " + c.str() + " not divisible by " + k.str());
    }
    out.add_term(m, q);
  }
  return out;
}

std::string to_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool is_constant = std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; });
    if (mag != 1 || is_constant) {
      out << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out << '*';
      out << p.variables()[i];
      if (m[i] != 1) out << '^' << m[i];
      wrote = true;
    }
  }
  return out.str();
}

IntPoly parse_poly(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("parse_poly: empty input");

  struct RawTerm {
    BigInt coeff;
    std::map<std::string, Exponent> powers;
  };
  std::vector<RawTerm> raw;
  std::vector<std::string> names;

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos) +
                                " in '" + text + "'");
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!raw.empty()) {
      fail("expected '+' or '-'");
    }
    RawTerm term{BigInt(sign), {}};
    bool any = false;
    while (true) {
      if (pos >= s.size()) fail("expected factor");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        if (any) fail("coefficient must come first");
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        term.coeff *= BigInt(s.substr(pos, end - pos));
        pos = end;
      } else if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
        std::size_t end = pos;
        while (end < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) {
          ++end;
        }
        const std::string name = s.substr(pos, end - pos);
        pos = end;
        Exponent e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t stop = pos;
          while (stop < s.size() && std::isdigit(static_cast<unsigned char>(s[stop]))) ++stop;
          if (stop == pos) fail("expected exponent");
          const unsigned long long v = std::stoull(s.substr(pos, stop - pos));
          if (v > std::numeric_limits<Exponent>::max()) fail("exponent overflow");
          e = static_cast<Exponent>(v);
          pos = stop;
        }
        term.powers[name] = checked_exponent_add(term.powers[name], e);
        names.push_back(name);
      } else {
        fail("unexpected character");
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    raw.push_back(std::move(term));
  }

  IntPoly out(names);
  for (const auto& t : raw) {
    Monomial m(out.variables().size(), 0);
    for (const auto& [name, e] : t.powers) m[static_cast<std::size_t>(out.variable_index(name))] = e;
    out.add_term(m, t.coeff);
  }
  return out;
}

}  // namespace ntcodes
