#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rsdl/parse.hpp"
#include "rsdl/rng.hpp"

using namespace rsdl;
using testing_helpers::coeffs_of;
using testing_helpers::gf_of;

namespace {

Poly random_poly(const Field& F, std::size_t max_degree, Rng& rng) {
  std::vector<Elem> c(rng.below(max_degree + 2));
  for (auto& v : c) v = static_cast<Elem>(rng.below(F.q()));
  return Poly(F, c);
}

class PolyProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PolyProperties, DivisionIdentity) {
  const Field F = Field::of_order(GetParam());
  Rng rng(GetParam());
  for (int t = 0; t < 200; ++t) {
    const Poly a = random_poly(F, 8, rng), b = random_poly(F, 4, rng);
    if (b.is_zero()) continue;
    const auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    if (!rem.is_zero()) EXPECT_LT(*rem.degree(), *b.degree());
  }
}

TEST_P(PolyProperties, ProductMatchesOracleAndEvaluation) {
  const Field F = Field::of_order(GetParam());
  const auto G = gf_of(F);
  Rng rng(GetParam() + 100);
  for (int t = 0; t < 100; ++t) {
    const Poly a = random_poly(F, 5, rng), b = random_poly(F, 5, rng);
    const Poly ab = a * b;
    auto expect = G.poly_mul(coeffs_of(a), coeffs_of(b));
    while (!expect.empty() && expect.back() == 0) expect.pop_back();
    EXPECT_EQ(coeffs_of(ab), expect);
    for (Elem x = 0; x < F.q(); ++x) {
      EXPECT_EQ(ab.eval(x), F.mul(a.eval(x), b.eval(x)));
      EXPECT_EQ((a + b).eval(x), F.add(a.eval(x), b.eval(x)));
      EXPECT_EQ((a - b).eval(x), F.sub(a.eval(x), b.eval(x)));
      EXPECT_EQ(a.eval(F.add(x, 1)), a.shifted(1).eval(x));
    }
  }
}

TEST_P(PolyProperties, GcdDividesBoth) {
  const Field F = Field::of_order(GetParam());
  Rng rng(GetParam() + 200);
  for (int t = 0; t < 100; ++t) {
    const Poly common = random_poly(F, 2, rng);
    const Poly a = random_poly(F, 4, rng) * common, b = random_poly(F, 4, rng) * common;
    const Poly g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      EXPECT_TRUE(g.is_zero());
      continue;
    }
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    if (!common.is_zero()) EXPECT_TRUE((g % common.monic()).is_zero());
  }
}

TEST_P(PolyProperties, RootCountsAgree) {
  const Field F = Field::of_order(GetParam());
  Rng rng(GetParam() + 300);
  const auto all = F.elements();
  for (int t = 0; t < 100; ++t) {
    const Poly f = random_poly(F, 6, rng);
    std::size_t brute = 0;
    for (Elem x = 0; x < F.q(); ++x) brute += f.eval(x) == 0;
    EXPECT_EQ(distinct_root_count(f), brute);
    EXPECT_EQ(distinct_root_count_gcd(f), brute);
    EXPECT_EQ(distinct_root_count_on(f, all), brute);
  }
  EXPECT_EQ(distinct_root_count(Poly(F)), F.q());
}

TEST_P(PolyProperties, PowmodMatchesRepeatedProduct) {
  const Field F = Field::of_order(GetParam());
  Rng rng(GetParam() + 400);
  const Poly m = Poly::monomial(F, 3) + Poly::constant(F, 1);
  const Poly base = random_poly(F, 4, rng);
  Poly acc = Poly::constant(F, 1);
  for (std::uint64_t n = 0; n < 20; ++n) {
    EXPECT_EQ(powmod(base, n, m), acc % m);
    acc = (acc * base) % m;
  }
}

TEST_P(PolyProperties, InterpolationRecoversPolynomial) {
  const Field F = Field::of_order(GetParam());
  Rng rng(GetParam() + 500);
  const auto domain = F.elements();
  for (int t = 0; t < 50; ++t) {
    const Poly f = random_poly(F, F.q() - 2, rng);
    EXPECT_EQ(lagrange_interpolate(evaluate_word(f, domain)), f);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, PolyProperties, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u));

TEST(Poly, Normalization) {
  const Field F = Field::of_order(5);
  const Poly f(F, {1, 2, 0, 0});
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_FALSE(Poly(F).degree().has_value());
  EXPECT_EQ(Poly(F, {0, 0}), Poly(F));
  EXPECT_EQ(f.without_terms_below(1), Poly(F, {0, 2}));
  EXPECT_EQ(f.truncated(1), Poly::constant(F, 1));
  EXPECT_EQ(Poly(F, {2, 4}).monic(), Poly(F, {3, 1}));
  EXPECT_EQ(Poly::linear_root(F, 2).eval(2), 0u);
}

TEST(Poly, Errors) {
  const Field F = Field::of_order(5), G = Field::of_order(7);
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  EXPECT_EQ(kind_of([&] { divmod(Poly::constant(F, 1), Poly(F)); }), ErrorKind::DivisionByZeroPoly);
  EXPECT_EQ(kind_of([&] { (void)(Poly::constant(F, 1) + Poly::constant(G, 1)); }), ErrorKind::FieldMismatch);
  Word dup{F, {0, 1, 1}, {0, 0, 0}};
  EXPECT_EQ(kind_of([&] { dup.validate(); }), ErrorKind::DuplicateDomainPoint);
  Word short_word{F, {0, 1, 2}, {0, 0}};
  EXPECT_EQ(kind_of([&] { short_word.validate(); }), ErrorKind::InvalidArgument);
}

TEST(Poly, TextRoundTrip) {
  for (std::uint32_t q : {3u, 4u, 9u}) {
    const Field F = Field::of_order(q);
    Rng rng(q);
    for (int t = 0; t < 50; ++t) {
      const Poly f = random_poly(F, 5, rng);
      EXPECT_EQ(parse_poly(to_string(f), F), f) << to_string(f);
      EXPECT_EQ(parse_poly(to_list_string(f), F), f) << to_list_string(f);
    }
  }
}

}  // namespace
