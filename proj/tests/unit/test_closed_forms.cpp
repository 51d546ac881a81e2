#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "rsdl/closed_forms.hpp"
#include "rsdl/exact_counts.hpp"
#include "rsdl/rng.hpp"

using namespace rsdl;
using testing_helpers::coeffs_of;
using testing_helpers::gf_of;

namespace {

mpz_class big(std::uint64_t v) { return mpz_class(std::to_string(v)); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

TEST(Formulas, MonomialCountMatchesOracle) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field F = Field::of_order(q);
    const auto G = gf_of(F);
    for (std::size_t k = 1; k <= std::min<std::size_t>(q - 1, 3); ++k) {
      const auto hist = oracle::count_N(G, coeffs_of(Poly::monomial(F, k)), k, oracle::all_elements(G));
      for (std::size_t r = 0; r <= k; ++r)
        EXPECT_EQ(knopfmacher_Nxk(q, static_cast<long>(k), static_cast<long>(r)), big(hist[r]))
            << "q=" << q << " k=" << k << " r=" << r;
    }
  }
}

TEST(Formulas, CodewordCountMatchesOracle) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const Field F = Field::of_order(q);
    const auto G = gf_of(F);
    for (std::size_t k = 1; k <= 3 && k < q; ++k) {
      const auto hist = oracle::count_N(G, {}, k, oracle::all_elements(G));
      for (std::size_t r = 0; r < k; ++r)
        EXPECT_EQ(macwilliams_N0(q, static_cast<long>(k), static_cast<long>(r)), big(hist[r]));
    }
  }
  EXPECT_EQ(kind_of([] { macwilliams_N0(5, 2, 2); }), ErrorKind::RangeError);
}

TEST(Formulas, MonomialExactCaseAtRK) {
  // r = k: every k-subset of F_q gives exactly one g.
  EXPECT_EQ(knopfmacher_Nxk(5, 2, 2), 10);
  EXPECT_EQ(knopfmacher_Nxk(7, 3, 3), 35);
}

TEST(MainTerm, Specializations) {
  EXPECT_EQ(mu(-1, 5, 2), 0);
  EXPECT_EQ(mu(0, 5, 2), 1);
  for (long q : {5, 7, 9})
    for (long k = 1; k < 4; ++k) {
      for (long r = 0; r <= k; ++r) EXPECT_EQ(thm15_main_term(q, k, 0, r), mpq_class(knopfmacher_Nxk(q, k, r)));
      for (long m = 1; k + m <= q - 1; ++m) {
        EXPECT_EQ(thm15_main_term(q, k, m, k + m), mpq_class(binomial(q, k + m)) / rational_pow(q, m));
        EXPECT_EQ(thm15_main_term(q, k, m, k + m - 1),
                  mpq_class(binomial(q, k + m - 1) * (k + m - 1)) / rational_pow(q, m));
      }
    }
}

TEST(ErrorBound, SpecialCasesOfTheSum) {
  for (long q : {5, 7, 8, 9}) {
    const long p = static_cast<long>(Field::of_order(static_cast<std::uint32_t>(q)).p());
    for (long k = 1; k < 4; ++k)
      for (long m = 1; k + m <= q - 1; ++m) {
        const BoundParams bp{static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(p), k, m, 128};
        EXPECT_EQ(thm15_error_bound(bp, k + m).compare(top_root_bound(bp)), 0);
        const UpperReal two = thm15_error_bound(bp, k + m - 1);
        const UpperReal combined = second_root_bound(bp);
        // Equal as real numbers when m = 1; allow the two upward roundings to differ in the last bits.
        EXPECT_LE(two.to_double(), combined.to_double() * (1 + 1e-15));
      }
    const BoundParams zero{static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(p), 2, 0, 128};
    EXPECT_TRUE(thm15_error_bound(zero, 1).is_zero());
  }
}

TEST(ErrorBound, PairBoundRange) {
  const BoundParams bp{7, 7, 2, 2, 128};
  EXPECT_EQ(kind_of([&] { lemma11_bound(bp, 2); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { lemma11_bound(bp, 5); }), ErrorKind::RangeError);
  EXPECT_NO_THROW(lemma11_bound(bp, 3));
  EXPECT_EQ(kind_of([] { second_root_bound(BoundParams{7, 7, 2, 0, 128}); }), ErrorKind::RangeError);
}

TEST(VerifyBound, HoldsOnRandomInstances) {
  Rng rng(77);
  for (std::uint32_t q : {5u, 7u, 8u, 9u}) {
    const Field F = Field::of_order(q);
    for (int t = 0; t < 8; ++t) {
      const std::size_t k = 1 + rng.below(3);
      const std::size_t m = rng.below(q - k);
      std::vector<Elem> c(k + m + 1, 0);
      for (std::size_t i = k; i < k + m; ++i) c[i] = static_cast<Elem>(rng.below(q));
      c[k + m] = 1;
      const Poly f(F, c);
      const auto rows = verify_bound_all_r(f, k);
      ASSERT_EQ(rows.size(), k + m + 1);
      const auto hist = count_N_all(f, k);
      for (const auto& row : rows) {
        EXPECT_TRUE(*row.report.holds) << to_string(f) << " r=" << row.r;
        EXPECT_EQ(*row.report.oracle_value, big(hist[static_cast<std::size_t>(row.r)]));
        EXPECT_EQ(row.m, static_cast<long>(m));
      }
      for (const auto& row : verify_pair_bound_all_r(f, k)) {
        EXPECT_TRUE(row.holds);
        EXPECT_EQ(row.m_subsets, row.m_polys);
        EXPECT_EQ(row.bound.has_value(), row.r > static_cast<long>(k));
      }
    }
  }
}

TEST(VerifyBound, CodewordCaseAndRanges) {
  const Field F = Field::of_order(5);
  const auto rows = verify_bound_all_r(Poly(F), 2);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& row : rows) EXPECT_TRUE(*row.report.holds);
  EXPECT_EQ(rows[5].report.main_term, 1);
  EXPECT_EQ(kind_of([&] { verify_bound_all_r(Poly::monomial(F, 5), 1); }), ErrorKind::RangeError);
}

TEST(BoundReport, GapAndRelativeGap) {
  BoundReport rep{mpq_class(10, 3), UpperReal::from_ulong(1, 64), {}, {}, {}};
  rep.attach_oracle(3);
  EXPECT_EQ(*rep.gap(), mpq_class(1, 3));
  EXPECT_TRUE(*rep.holds);
  EXPECT_NEAR(*rep.relative_gap, 0.1, 1e-15);
}

TEST(InclusionExclusion, RebuildsCountsFromPairs) {
  Rng rng(55);
  for (std::uint32_t q : {4u, 5u, 7u}) {
    const Field F = Field::of_order(q);
    const auto G = gf_of(F);
    for (int t = 0; t < 5; ++t) {
      const std::size_t k = 1 + rng.below(2), m = rng.below(3);
      if (k + m > q - 1) continue;
      std::vector<Elem> c(k + m + 1, 0);
      for (std::size_t i = k; i < k + m; ++i) c[i] = static_cast<Elem>(rng.below(q));
      c[k + m] = 1;
      const Poly f(F, c);
      std::vector<std::uint64_t> mj;
      for (std::size_t j = 0; j <= k + m; ++j) mj.push_back(oracle::count_M(G, coeffs_of(f), k, j));
      const auto hist = oracle::count_N(G, coeffs_of(f), k, oracle::all_elements(G));
      for (std::size_t r = 0; r <= k + m; ++r)
        EXPECT_EQ(inclusion_exclusion_N(q, static_cast<long>(k), static_cast<long>(r), mj), big(hist[r]));
    }
  }
}

TEST(Regime, ParameterChecksAndRows) {
  EXPECT_EQ(kind_of([] { regime_report({0.3, 0.25, 0.1}, {101}); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([] { regime_report({0.3, 0.2, 0.2}, {101}); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([] { regime_report({1.0, 0.2, 0.1}, {101}); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([] { regime_report({0.3, 0.2, 0.1}, {100}); }), ErrorKind::NotPrime);
  const auto one = regime_report({0.3, 0.2, 0.1}, {101});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].k, 30);
  EXPECT_EQ(one[0].m, 2);
  EXPECT_EQ(one[0].r, 31);
}

TEST(Regime, RatioFormulaMatchesTerms) {
  for (long p : {101L, 211L, 401L}) {
    const long k = 20, m = 3, r = 22;
    for (long j = r; j < k + m; ++j) {
      const double direct = regime_e_term(p, k, m, r, j + 1) / regime_e_term(p, k, m, r, j);
      EXPECT_NEAR(regime_e_ratio_formula(p, k, m, r, j) / direct, 1.0, 1e-9) << p << " " << j;
    }
  }
}

}  // namespace
