#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ntcodes/codes.hpp"
#include "ntcodes/macwilliams.hpp"

namespace ntcodes::sweeps {

/// Outcome of one oracle-versus-formula sweep. `log` has one line per
/// checked tuple, in deterministic order.
struct SweepResult {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> log;

  bool ok() const { return mismatches == 0; }
  void merge(const SweepResult& other);
};

/// Deterministic generator; draws use plain modular reduction so results do
/// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct LcInstance {
  std::size_t n;
  std::int64_t m;
  std::uint32_t r;
  std::vector<std::int64_t> h;
  std::int64_t a;
};

LcInstance random_lc(Rng& rng, std::size_t max_n, std::int64_t max_m, std::uint32_t max_r);
/// 2 or 3 constraints drawn from omega, sigma, delta, gamma.
codes::CodeSpec random_sc(Rng& rng, std::size_t max_n, std::uint32_t max_r, std::int64_t max_m);
/// A parity-check matrix whose row span has exactly r^s elements.
macwilliams::Matrix random_full_rank(Rng& rng, std::uint32_t r, std::size_t n, std::size_t s);

/// Every (n, r, a1, a2, variant) with n <= max_n, r <= max_r: closed-form
/// Hamming enumerator and cardinality against enumeration, and the
/// character-sum extended enumerator against the oracle.
SweepResult tenengolts_sweep(std::size_t max_n, std::uint32_t max_r);

/// Seeded random LC/BLC instances: Hamming character sum against the oracle.
SweepResult lc_sweep(std::uint64_t seed, std::size_t count, std::size_t max_n = 8,
                     std::int64_t max_m = 12, std::uint32_t max_r = 4);

/// Seeded random SC specs: character-sum engine (no filtering shortcut)
/// against the oracle extended enumerator.
SweepResult sc_sweep(std::uint64_t seed, std::size_t count, std::size_t max_n = 6,
                     std::uint32_t max_r = 3, std::int64_t max_m = 8);

/// Shifted VT and non-binary SVT families through the character-sum engine.
SweepResult family_sweep(std::uint64_t seed, std::size_t count);

/// Seeded random full-rank H: MacWilliams identity, |L||L_perp| = r^n, and
/// agreement with the character-sum complete enumerator.
SweepResult macwilliams_sweep(std::uint64_t seed, std::size_t count, std::uint32_t max_r = 6,
                              std::size_t max_n = 6, std::size_t max_s = 3);

}  // namespace ntcodes::sweeps
