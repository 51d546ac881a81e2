#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsdl/characters.hpp"
#include "rsdl/error.hpp"
#include "rsdl/report.hpp"

namespace rsdl {

// Verification suites shared by `rsdl verify` and the acceptance binary.
// Every suite is deterministic for a fixed seed: instances are drawn and
// checked in a fixed order, and worker counts only split inner enumerations.

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_notes;  // first few failing instances
  Table table;

  bool passed() const { return checks > 0 && failures == 0; }
  void check(bool ok, const std::string& note);
  /// {"suite":..., "checks":..., "failures":..., "passed":..., "failing":[...]}
  std::string summary_json() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  Exec exec;
  unsigned precision_bits = kDefaultPrecisionBits;
};

/// N(x^k, r) against the closed form, every q in `qs`, 1 <= k <= min(q-1, kmax)
/// with q^k <= power_limit, 0 <= r <= k.
SuiteResult suite_knopfmacher(const std::vector<std::uint32_t>& qs, std::size_t kmax, std::uint64_t power_limit,
                              const SuiteConfig& cfg);
/// N(0, r) against the MacWilliams count on the same grid, plus N(0, q) = 1.
SuiteResult suite_macwilliams(const std::vector<std::uint32_t>& qs, std::size_t kmax, std::uint64_t power_limit,
                              const SuiteConfig& cfg);

/// Random normalized instances (q, k, m, f) with k+m <= q-1, q^k <= power_limit.
struct CountInstance {
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<Elem> f;  // ascending coefficients, monic of degree k+m
};
std::vector<CountInstance> random_count_instances(const std::vector<std::uint32_t>& qs, std::size_t count,
                                                  std::uint64_t power_limit, std::uint64_t seed);

/// |N - main| <= error bound for every r of every instance.
SuiteResult suite_main_bound(const std::vector<CountInstance>& instances, const SuiteConfig& cfg);
/// M(f, r) exact for r <= k and within the pair bound for k < r <= k+m;
/// both M implementations agree.
SuiteResult suite_pair_bound(const std::vector<CountInstance>& instances, const SuiteConfig& cfg);
/// N(f, r) rebuilt from M(f, j) by weighted inclusion-exclusion.
SuiteResult suite_inclusion_exclusion(const std::vector<CountInstance>& instances, const SuiteConfig& cfg);

/// Random sieve instances: direct sum = permutation sieve (all), = class
/// sieve (symmetric ones), and the tuple-count specialization.
SuiteResult suite_sieve(std::size_t trials, std::size_t kmax, std::size_t omega_max, const SuiteConfig& cfg);

/// Character checks for one modulus. With `scalars_only` the group is the
/// characters trivial on F_q^* (the one-unit dual when f = x^{m+1}).
void check_characters(const Poly& modulus, bool scalars_only, SuiteResult& out, const SuiteConfig& cfg);
/// x^{m+1} for each q, m, plus general moduli of degree 1..max_degree.
SuiteResult suite_characters(const std::vector<std::uint32_t>& qs, const std::vector<std::size_t>& ms,
                             std::size_t max_degree, const SuiteConfig& cfg);
/// Moduli used for the general-modulus part: for each degree, the first
/// irreducible, x^{n-1}(x-1), a product of distinct linear factors when
/// n <= q, and two seeded random monic polynomials.
std::vector<Poly> sample_moduli(const Field& F, std::size_t degree, std::uint64_t seed);

/// N_2 and N_2^* bounds (both through enumeration and characters) and the
/// alpha-decomposition identities.
SuiteResult suite_n2(const std::vector<std::uint32_t>& qs, const std::vector<std::size_t>& ms, std::size_t kmax,
                     const SuiteConfig& cfg);

/// Degree bounds over every word, the census at (q, k), sum of N_i(u), the
/// two distance-distribution routes and the MDS distance.
SuiteResult suite_rs(const std::vector<std::pair<std::uint32_t, std::size_t>>& params, const SuiteConfig& cfg);

/// Per-character rows (char, k, |M_k|, bound, pass) for one modulus.
Table weil_sweep_table(const Poly& modulus, bool scalars_only, const SuiteConfig& cfg);

}  // namespace rsdl
