#include "ntcodes/qcalc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace ntcodes::qcalc {

namespace {

const std::vector<std::string> kQ{"q"};

IntPoly from_dense(const std::vector<BigInt>& c) {
  IntPoly p(kQ);
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(Monomial{static_cast<Exponent>(i)}, c[i]);
  return p;
}

// Dense coefficient vectors of [a+b choose a]_q, memoized on (a, b).
const std::vector<BigInt>& gaussian(std::uint32_t a, std::uint32_t b) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BigInt>> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
  }
  std::vector<BigInt> result;
  if (a == 0 || b == 0) {
    result = {BigInt(1)};
  } else {
    // [a+b choose a] = [a+b-1 choose a-1] + q^a [a+b-1 choose a]
    const auto& left = gaussian(a - 1, b);
    const auto& right = gaussian(a, b - 1);
    result.assign(static_cast<std::size_t>(a) * b + 1, BigInt(0));
    for (std::size_t i = 0; i < left.size(); ++i) result[i] += left[i];
    for (std::size_t i = 0; i < right.size(); ++i) result[i + a] += right[i];
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace({a, b}, std::move(result)).first->second;
}

}  // namespace

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: needs at least one part");
  for (auto p : parts_) total_ += p;
}

std::vector<Composition> compositions(std::uint32_t n, std::uint32_t r) {
  if (r == 0) throw std::invalid_argument("compositions: r must be positive");
  std::vector<Composition> out;
  std::vector<std::uint32_t> parts(r, 0);
  // Recursive fill of parts[i..] with the remaining mass.
  auto fill = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
    if (i + 1 == r) {
      parts[i] = remaining;
      out.emplace_back(parts);
      return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
      parts[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  fill(fill, 0, n);
  return out;
}

IntPoly q_integer(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("q_integer: n must be positive, got " + std::to_string(n));
  return from_dense(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

IntPoly q_binomial(std::uint32_t a, std::uint32_t b) { return from_dense(gaussian(a, b)); }

IntPoly q_multinomial(const Composition& t) {
  IntPoly result = IntPoly::constant(1, kQ);
  std::uint32_t prefix = t.part(0);
  for (std::size_t k = 1; k < t.length(); ++k) {
    result = result * q_binomial(t.part(k), prefix);
    prefix += t.part(k);
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt multinomial(const Composition& t) {
  BigInt r = 1;
  std::uint64_t prefix = t.part(0);
  for (std::size_t k = 1; k < t.length(); ++k) {
    prefix += t.part(k);
    r *= binomial(prefix, t.part(k));
  }
  return r;
}

BigInt q_multinomial_at_root(const Composition& t, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("q_multinomial_at_root: d must be positive");
  const auto ud = static_cast<std::uint64_t>(d);
  if (t.total() % ud != 0) {
    throw std::invalid_argument("q_multinomial_at_root: " + std::to_string(d) +
                                " does not divide " + std::to_string(t.total()));
  }
  std::vector<std::uint32_t> reduced;
  reduced.reserve(t.length());
  for (auto p : t.parts()) {
    if (p % ud != 0) return 0;
    reduced.push_back(static_cast<std::uint32_t>(p / ud));
  }
  return multinomial(Composition(std::move(reduced)));
}

}  // namespace ntcodes::qcalc
