#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsdl/bigmath.hpp"
#include "rsdl/error.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

/// mu_s = sum_{j=0}^{s} (-1)^j C(q-r, j) q^{-j}, exactly.
mpq_class mu(long s, long q, long r);

/// Codeword-case count N(0, r), 0 <= r <= k-1. Throws RangeError outside
/// that range and NonIntegralResult if the rational evaluation is not an
/// integer.
mpz_class macwilliams_N0(long q, long k, long r);

/// Exact N(x^k, r) for 0 <= r <= k.
mpz_class knopfmacher_Nxk(long q, long k, long r);

/// mu_{k+m-r} C(q, r) q^{k-r}.
mpq_class thm15_main_term(long q, long k, long m, long r);

/// Parameters shared by the explicit error bounds.
struct BoundParams {
  long q = 0;
  long p = 0;
  long k = 0;
  long m = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
};

/// sum_{j=k+1}^{k+m} C(j,r) C(q/p + m sqrt(q) + j, j) C(m-1, k+m-j) sqrt(q)^{k+m-j},
/// every term rounded upward.
UpperReal thm15_error_bound(const BoundParams& bp, long r);
/// Bound on |M(f, r) - C(q,r) q^{k-r}| for k+1 <= r <= k+m:
/// C(q/p + m sqrt(q) + r, r) C(m-1, d-r) sqrt(q)^{d-r}.
UpperReal lemma11_bound(const BoundParams& bp, long r);
/// Single-term bound when r = k+m: C(q/p + m sqrt(q) + k+m, k+m).
UpperReal top_root_bound(const BoundParams& bp);
/// Combined two-term bound when r = k+m-1:
/// C(q/p + m sqrt(q) + k+m, k+m) ((m-1) sqrt(q) + k+m).
UpperReal second_root_bound(const BoundParams& bp);

/// (q/p + m sqrt(q) + r - 1)_r C(m-1, d-r) sqrt(q)^{d-r}, points in F_q.
UpperReal n2_bound(long q, long p, long r, long d, long m, unsigned precision_bits = kDefaultPrecisionBits);
/// ((q-1)/p + m sqrt(q) + r - 1)_r C(m-1, d-r) sqrt(q)^{d-r}, points in F_q^*.
UpperReal n2_star_bound(long q, long p, long r, long d, long m,
                        unsigned precision_bits = kDefaultPrecisionBits);
/// (q)_r q^{k-r} and (q-1)_r q^{k-r} with k = d - m.
mpq_class n2_main_term(long q, long r, long d, long m);
mpq_class n2_star_main_term(long q, long r, long d, long m);

/// Main term, error bound and, when available, the oracle comparison for a
/// single (q, k, m, r) instance.
struct BoundReport {
  mpq_class main_term;
  UpperReal error_bound;
  std::optional<mpz_class> oracle_value;
  std::optional<bool> holds;
  /// |oracle - main| / |main| (0 when both vanish).
  std::optional<double> relative_gap;

  /// |oracle - main| exactly, when the oracle is present.
  std::optional<mpq_class> gap() const;
  /// Sets oracle_value, holds and relative_gap.
  void attach_oracle(const mpz_class& oracle);
};

/// Context columns for one verified instance.
struct BoundRow {
  long q = 0, p = 0, k = 0, m = 0, r = 0;
  std::string f;
  BoundReport report;
};

/// Checks |N(f,r) - main| <= bound for every r in [0, deg f] (or, for the
/// codeword case m < 0, against the MacWilliams counts for r in [0, q]).
std::vector<BoundRow> verify_bound_all_r(const Poly& f, std::size_t k, const Exec& exec = {},
                                         unsigned precision_bits = kDefaultPrecisionBits);
BoundRow verify_bound(const Poly& f, std::size_t k, std::size_t r, const Exec& exec = {},
                      unsigned precision_bits = kDefaultPrecisionBits);

/// Checks |M(f,r) - C(q,r) q^{k-r}| <= lemma11_bound (k+1 <= r <= d) using
/// both M implementations; equality for r <= k.
struct PairBoundRow {
  long q = 0, p = 0, k = 0, m = 0, r = 0;
  std::string f;
  std::uint64_t m_subsets = 0;
  std::uint64_t m_polys = 0;
  mpq_class main_term;
  std::optional<UpperReal> bound;  // absent for r <= k (exact case)
  bool holds = false;
};
std::vector<PairBoundRow> verify_pair_bound_all_r(const Poly& f, std::size_t k, const Exec& exec = {},
                                                  unsigned precision_bits = kDefaultPrecisionBits);

/// Reconstructs N(f, r) from M(f, j) by weighted inclusion-exclusion:
/// sum_{j=r}^{k} (-1)^{j-r} C(j,r) C(q,j) q^{k-j} + sum_{j=k+1}^{d} (-1)^{j-r} C(j,r) M(f,j).
mpz_class inclusion_exclusion_N(long q, long k, long r, const std::vector<std::uint64_t>& m_by_j);

struct RegimeParams {
  double c = 0;
  double delta = 0;
  double lambda = 0;

  /// Throws RangeError unless c in (0,1), delta in (0,1/4), lambda in (0,delta).
  void validate() const;
  /// floor(c p), floor(p^delta), floor(c p) + floor(p^lambda).
  long k_for(long p) const;
  long m_for(long p) const;
  long r_for(long p) const;
};

struct RegimeRow {
  long p = 0, k = 0, m = 0, r = 0;
  double main_term = 0;        // nearest double of the exact main term
  UpperReal error_bound;       // full error sum
  double ratio = 0;            // error_bound / main_term
  std::vector<double> e_terms;  // E_j for j = r..k+m
  bool e_increasing = false;   // every E_{j+1}/E_j > 1
  std::size_t argmax_offset = 0;  // argmax_j E_j - r
  double max_ratio_formula_error = 0;  // worst relative mismatch of the E-ratio formula
  double m_times_max_e = 0;
  bool applicable = true;      // 1 <= r-k <= m and k+m <= p-1
};

/// Diagnostic table for the large-p regime. Asserts nothing about limits.
std::vector<RegimeRow> regime_report(const RegimeParams& params, const std::vector<long>& primes,
                                     unsigned precision_bits = kDefaultPrecisionBits);

/// E_j = C(j,r) C(m sqrt(p) + 1 + j, j) C(m-1, k+m-j) p^{(k+m-j)/2}.
double regime_e_term(long p, long k, long m, long r, long j, unsigned precision_bits = kDefaultPrecisionBits);
/// Closed-form E_{j+1}/E_j.
double regime_e_ratio_formula(long p, long k, long m, long r, long j);

}  // namespace rsdl
