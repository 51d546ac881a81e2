#include "rsdl/closed_forms.hpp"

#include <cmath>
#include <limits>

#include "rsdl/exact_counts.hpp"

namespace rsdl {

namespace {

mpz_class require_integer(const mpq_class& v, const char* what) {
  if (v.get_den() != 1) throw Error(ErrorKind::NonIntegralResult, std::string(what) + " gave " + v.get_str());
  return v.get_num();
}

void require_q(long q, long p) {
  if (q < 2 || p < 2 || q % p != 0) throw Error(ErrorKind::InvalidArgument, "need q a power of p");
}

// q/p + m sqrt(q), rounded up.
UpperReal shift_term(long q, long p, long m, unsigned bits) {
  return UpperReal::sqrt_of(static_cast<unsigned long>(q), bits) * static_cast<unsigned long>(m) +
         static_cast<unsigned long>(q / p);
}

UpperReal sqrt_q_pow(long q, long e, unsigned bits) {
  return UpperReal::sqrt_of(static_cast<unsigned long>(q), bits).pow(static_cast<unsigned long>(e));
}

double to_double_q(const mpq_class& v) { return v.get_d(); }

}  // namespace

mpq_class mu(long s, long q, long r) {
  mpq_class out = 0;
  for (long j = 0; j <= s; ++j) {
    mpq_class term(binomial(q - r, j), 1);
    term *= rational_pow(static_cast<unsigned long>(q), -j);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

mpz_class macwilliams_N0(long q, long k, long r) {
  if (r < 0 || r > k - 1) throw Error(ErrorKind::RangeError, "MacWilliams count needs 0 <= r <= k-1");
  mpq_class inner = 0;
  for (long j = 0; j <= k - r - 1; ++j) {
    mpq_class term(binomial(q - r - 1, j), 1);
    term *= rational_pow(static_cast<unsigned long>(q), -j);
    if (j % 2) inner -= term;
    else inner += term;
  }
  mpq_class v(binomial(q, r), 1);
  v *= rational_pow(static_cast<unsigned long>(q), k - r - 1);
  v *= q - 1;
  v *= inner;
  return require_integer(v, "MacWilliams count");
}

mpz_class knopfmacher_Nxk(long q, long k, long r) {
  if (r < 0 || r > k) throw Error(ErrorKind::RangeError, "N(x^k, r) needs 0 <= r <= k");
  mpq_class v(binomial(q, r), 1);
  v *= rational_pow(static_cast<unsigned long>(q), k - r);
  v *= mu(k - r, q, r);
  return require_integer(v, "N(x^k, r)");
}

mpq_class thm15_main_term(long q, long k, long m, long r) {
  mpq_class v(binomial(q, r), 1);
  v *= rational_pow(static_cast<unsigned long>(q), k - r);
  v *= mu(k + m - r, q, r);
  return v;
}

UpperReal thm15_error_bound(const BoundParams& bp, long r) {
  require_q(bp.q, bp.p);
  UpperReal total(bp.precision_bits);
  if (bp.m <= 0) return total;
  const UpperReal a = shift_term(bp.q, bp.p, bp.m, bp.precision_bits);
  for (long j = bp.k + 1; j <= bp.k + bp.m; ++j) {
    const mpz_class cjr = binomial(j, r);
    const mpz_class cm = binomial(bp.m - 1, bp.k + bp.m - j);
    if (cjr == 0 || cm == 0) continue;
    UpperReal term = binomial_up(a + static_cast<unsigned long>(j), static_cast<unsigned long>(j));
    term = term * cjr * cm * sqrt_q_pow(bp.q, bp.k + bp.m - j, bp.precision_bits);
    total = total + term;
  }
  return total;
}

UpperReal lemma11_bound(const BoundParams& bp, long r) {
  require_q(bp.q, bp.p);
  const long d = bp.k + bp.m;
  if (r < bp.k + 1 || r > d) throw Error(ErrorKind::RangeError, "pair bound needs k+1 <= r <= k+m");
  const UpperReal a = shift_term(bp.q, bp.p, bp.m, bp.precision_bits);
  const UpperReal head = binomial_up(a + static_cast<unsigned long>(r), static_cast<unsigned long>(r));
  return head * binomial(bp.m - 1, d - r) * sqrt_q_pow(bp.q, d - r, bp.precision_bits);
}

UpperReal top_root_bound(const BoundParams& bp) {
  require_q(bp.q, bp.p);
  const long d = bp.k + bp.m;
  const UpperReal a = shift_term(bp.q, bp.p, bp.m, bp.precision_bits);
  return binomial_up(a + static_cast<unsigned long>(d), static_cast<unsigned long>(d));
}

UpperReal second_root_bound(const BoundParams& bp) {
  if (bp.m < 1) throw Error(ErrorKind::RangeError, "combined bound needs m >= 1");
  const UpperReal factor = UpperReal::sqrt_of(static_cast<unsigned long>(bp.q), bp.precision_bits) *
                               static_cast<unsigned long>(bp.m - 1) +
                           static_cast<unsigned long>(bp.k + bp.m);
  return top_root_bound(bp) * factor;
}

namespace {

UpperReal n2_bound_with(const UpperReal& base, long q, long r, long d, long m, unsigned bits) {
  const mpz_class cm = binomial(m - 1, d - r);
  if (cm == 0) return UpperReal(bits);
  UpperReal x = base + static_cast<unsigned long>(r);
  x = x.minus(1);
  return falling_up(x, static_cast<unsigned long>(r)) * cm * sqrt_q_pow(q, d - r, bits);
}

}  // namespace

UpperReal n2_bound(long q, long p, long r, long d, long m, unsigned precision_bits) {
  require_q(q, p);
  if (r < 1) return n2_bound_with(UpperReal(precision_bits), q, r, d, m, precision_bits);
  return n2_bound_with(shift_term(q, p, m, precision_bits), q, r, d, m, precision_bits);
}

UpperReal n2_star_bound(long q, long p, long r, long d, long m, unsigned precision_bits) {
  require_q(q, p);
  if (r < 1) return n2_bound_with(UpperReal(precision_bits), q, r, d, m, precision_bits);
  const UpperReal base = UpperReal::sqrt_of(static_cast<unsigned long>(q), precision_bits) *
                             static_cast<unsigned long>(m) +
                         UpperReal(mpq_class(q - 1, p), precision_bits);
  return n2_bound_with(base, q, r, d, m, precision_bits);
}

mpq_class n2_main_term(long q, long r, long d, long m) {
  return mpq_class(falling_factorial(q, r)) * rational_pow(static_cast<unsigned long>(q), d - m - r);
}

mpq_class n2_star_main_term(long q, long r, long d, long m) {
  return mpq_class(falling_factorial(q - 1, r)) * rational_pow(static_cast<unsigned long>(q), d - m - r);
}

std::optional<mpq_class> BoundReport::gap() const {
  if (!oracle_value) return std::nullopt;
  return abs(mpq_class(*oracle_value) - main_term);
}

void BoundReport::attach_oracle(const mpz_class& oracle) {
  oracle_value = oracle;
  const mpq_class g = *gap();
  holds = error_bound.compare(g) >= 0;
  if (g == 0) relative_gap = 0.0;
  else if (main_term == 0) relative_gap = std::numeric_limits<double>::infinity();
  else relative_gap = to_double_q(g / abs(main_term));
}

std::vector<BoundRow> verify_bound_all_r(const Poly& f_in, std::size_t k, const Exec& exec,
                                         unsigned precision_bits) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "dimension k must be at least 1");
  const Field& F = f_in.field();
  const Poly f = normalize_for_counting(f_in, k);
  const long q = F.q(), p = F.p(), kk = static_cast<long>(k);
  const long m = excess_degree(f, k);
  if (kk + m > q - 1) throw Error(ErrorKind::RangeError, "need deg f <= q-1");
  const auto hist = count_N_all(f, k, exec);
  const std::string ftext = to_string(f);

  std::vector<BoundRow> rows;
  if (m < 0) {
    for (long r = 0; r <= q; ++r) {
      BoundRow row;
      row.q = q, row.p = p, row.k = kk, row.m = m, row.r = r, row.f = ftext;
      if (r <= kk - 1) row.report.main_term = mpq_class(macwilliams_N0(q, kk, r));
      else row.report.main_term = r == q ? 1 : 0;
      row.report.error_bound = UpperReal(precision_bits);
      row.report.attach_oracle(hist[static_cast<std::size_t>(r)]);
      rows.push_back(std::move(row));
    }
    return rows;
  }
  const BoundParams bp{q, p, kk, m, precision_bits};
  for (long r = 0; r <= kk + m; ++r) {
    BoundRow row;
    row.q = q, row.p = p, row.k = kk, row.m = m, row.r = r, row.f = ftext;
    row.report.main_term = thm15_main_term(q, kk, m, r);
    row.report.error_bound = thm15_error_bound(bp, r);
    row.report.attach_oracle(hist[static_cast<std::size_t>(r)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

BoundRow verify_bound(const Poly& f, std::size_t k, std::size_t r, const Exec& exec, unsigned precision_bits) {
  auto rows = verify_bound_all_r(f, k, exec, precision_bits);
  for (auto& row : rows)
    if (row.r == static_cast<long>(r)) return std::move(row);
  throw Error(ErrorKind::RangeError, "r outside [0, deg f]");
}

std::vector<PairBoundRow> verify_pair_bound_all_r(const Poly& f_in, std::size_t k, const Exec& exec,
                                                  unsigned precision_bits) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "dimension k must be at least 1");
  const Field& F = f_in.field();
  const Poly f = normalize_for_counting(f_in, k);
  const long q = F.q(), p = F.p(), kk = static_cast<long>(k);
  const long m = excess_degree(f, k);
  if (m < 0) throw Error(ErrorKind::IsCodeword, "pair counts need deg f >= k");
  if (kk + m > q - 1) throw Error(ErrorKind::RangeError, "need deg f <= q-1");
  const auto hist = count_N_all(f, k, exec);
  const BoundParams bp{q, p, kk, m, precision_bits};
  const std::string ftext = to_string(f);

  std::vector<PairBoundRow> rows;
  for (long r = 0; r <= kk + m; ++r) {
    PairBoundRow row;
    row.q = q, row.p = p, row.k = kk, row.m = m, row.r = r, row.f = ftext;
    row.m_subsets = count_M_subsets(f, k, static_cast<std::size_t>(r), exec);
    std::uint64_t from_hist = 0;
    for (std::size_t t = static_cast<std::size_t>(r); t < hist.size(); ++t)
      from_hist += hist[t] * binomial(static_cast<long>(t), r).get_ui();
    row.m_polys = from_hist;
    row.main_term = mpq_class(binomial(q, r)) * rational_pow(static_cast<unsigned long>(q), kk - r);
    const mpq_class gap = abs(mpq_class(row.m_subsets) - row.main_term);
    if (r <= kk) {
      row.holds = gap == 0 && row.m_subsets == row.m_polys;
    } else {
      row.bound = lemma11_bound(bp, r);
      row.holds = row.bound->compare(gap) >= 0 && row.m_subsets == row.m_polys;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

mpz_class inclusion_exclusion_N(long q, long k, long r, const std::vector<std::uint64_t>& m_by_j) {
  if (m_by_j.empty()) throw Error(ErrorKind::InvalidArgument, "need M(f, j) for j = 0..d");
  const long d = static_cast<long>(m_by_j.size()) - 1;
  mpz_class total = 0;
  for (long j = r; j <= k; ++j) {
    mpz_class term = binomial(j, r) * binomial(q, j);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k - j));
    term *= pw;
    if ((j - r) % 2) total -= term;
    else total += term;
  }
  for (long j = std::max(k + 1, r); j <= d; ++j) {
    const mpz_class term = binomial(j, r) * mpz_class(std::to_string(m_by_j[static_cast<std::size_t>(j)]));
    if ((j - r) % 2) total -= term;
    else total += term;
  }
  return total;
}

void RegimeParams::validate() const {
  if (!(c > 0 && c < 1)) throw Error(ErrorKind::RangeError, "c must lie in (0, 1)");
  if (!(delta > 0 && delta < 0.25)) throw Error(ErrorKind::RangeError, "delta must lie in (0, 1/4)");
  if (!(lambda > 0 && lambda < delta)) throw Error(ErrorKind::RangeError, "lambda must lie in (0, delta)");
}

long RegimeParams::k_for(long p) const { return static_cast<long>(std::floor(c * static_cast<double>(p))); }
long RegimeParams::m_for(long p) const {
  return static_cast<long>(std::floor(std::pow(static_cast<double>(p), delta)));
}
long RegimeParams::r_for(long p) const {
  return k_for(p) + static_cast<long>(std::floor(std::pow(static_cast<double>(p), lambda)));
}

double regime_e_term(long p, long k, long m, long r, long j, unsigned precision_bits) {
  const mpz_class cjr = binomial(j, r);
  const mpz_class cm = binomial(m - 1, k + m - j);
  if (cjr == 0 || cm == 0) return 0.0;
  const UpperReal a = UpperReal::sqrt_of(static_cast<unsigned long>(p), precision_bits) *
                          static_cast<unsigned long>(m) +
                      static_cast<unsigned long>(1 + j);
  UpperReal e = binomial_up(a, static_cast<unsigned long>(j));
  e = e * cjr * cm * sqrt_q_pow(p, k + m - j, precision_bits);
  return e.to_double();
}

double regime_e_ratio_formula(long p, long k, long m, long r, long j) {
  const double sp = std::sqrt(static_cast<double>(p));
  const double jj = static_cast<double>(j);
  return ((jj + 1) / (jj + 1 - static_cast<double>(r))) * ((static_cast<double>(m) * sp + jj + 2) / (jj + 1)) *
         (static_cast<double>(k + m - j) / ((jj - static_cast<double>(k)) * sp));
}

std::vector<RegimeRow> regime_report(const RegimeParams& params, const std::vector<long>& primes,
                                     unsigned precision_bits) {
  params.validate();
  std::vector<RegimeRow> rows;
  for (long p : primes) {
    if (!is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::NotPrime, std::to_string(p));
    RegimeRow row;
    row.p = p;
    row.k = params.k_for(p);
    row.m = params.m_for(p);
    row.r = params.r_for(p);
    row.applicable = row.r - row.k >= 1 && row.r - row.k <= row.m && row.k + row.m <= p - 1;
    row.main_term = to_double_q(thm15_main_term(p, row.k, row.m, row.r));
    row.error_bound = thm15_error_bound(BoundParams{p, p, row.k, row.m, precision_bits}, row.r);
    row.ratio = row.main_term != 0 ? row.error_bound.to_double() / row.main_term
                                   : std::numeric_limits<double>::infinity();

    double best = -1;
    for (long j = row.r; j <= row.k + row.m; ++j) {
      const double e = regime_e_term(p, row.k, row.m, row.r, j, precision_bits);
      row.e_terms.push_back(e);
      if (e > best) {
        best = e;
        row.argmax_offset = static_cast<std::size_t>(j - row.r);
      }
    }
    row.e_increasing = !row.e_terms.empty();
    for (std::size_t i = 0; i + 1 < row.e_terms.size(); ++i) {
      const long j = row.r + static_cast<long>(i);
      const double actual = row.e_terms[i + 1] / row.e_terms[i];
      const double formula = regime_e_ratio_formula(p, row.k, row.m, row.r, j);
      row.max_ratio_formula_error = std::max(row.max_ratio_formula_error, std::abs(actual - formula) / formula);
      if (!(actual > 1)) row.e_increasing = false;
    }
    row.m_times_max_e = best > 0 ? static_cast<double>(row.m) * best : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rsdl
