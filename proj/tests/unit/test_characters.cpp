#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "helpers.hpp"
#include "rsdl/bigmath.hpp"
#include "rsdl/characters.hpp"
#include "rsdl/weil.hpp"

using namespace rsdl;
using testing_helpers::gf_of;

namespace {

using Ring = std::shared_ptr<const ResidueRing>;

Ring ring_of(const Poly& f) { return std::make_shared<const ResidueRing>(f); }

TEST(ResidueRing, MultiplicationMatchesPolynomialProduct) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const Field F = Field::of_order(q);
    const Poly f(F, {1, 2 % q, 0, 1});
    const ResidueRing R(f);
    ASSERT_EQ(R.size(), oracle::ipow(q, 3));
    for (ResidueRing::Res a = 0; a < R.size(); a += 3)
      for (ResidueRing::Res b = 0; b < R.size(); b += 5) {
        const Poly expect = (R.to_poly(a) * R.to_poly(b)) % f;
        EXPECT_EQ(R.to_poly(R.mul(a, b)), expect);
      }
    for (ResidueRing::Res a = 0; a < R.size(); ++a) EXPECT_EQ(R.from_poly(R.to_poly(a)), a);
  }
}

TEST(ResidueRing, UnitsMatchBruteForceInverseSearch) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field F = Field::of_order(q);
    for (const Poly& f : {Poly(F, {0, 0, 1}), Poly(F, {0, 1, 1}), Poly(F, {1, 1, 0, 1}), Poly(F, {0, 0, 0, 1})}) {
      const ResidueRing R(f);
      std::vector<ResidueRing::Res> brute;
      for (ResidueRing::Res a = 0; a < R.size(); ++a)
        for (ResidueRing::Res b = 0; b < R.size(); ++b)
          if (R.mul(a, b) == R.one()) {
            brute.push_back(a);
            break;
          }
      EXPECT_EQ(R.units(), brute) << to_string(f);
      EXPECT_EQ(R.unit_count_formula(), brute.size()) << to_string(f);
      for (auto u : brute) EXPECT_TRUE(R.is_unit(u));
    }
  }
}

TEST(AbelianGroup, DecompositionCoordinatesRoundTrip) {
  for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u}) {
    const Field F = Field::of_order(q);
    for (const Poly& f : {Poly::monomial(F, 3), Poly(F, {1, 1, 1}), Poly(F, {0, 1, 0, 1})}) {
      const Ring R = ring_of(f);
      const AbelianGroup G = decompose(R, R->units());
      EXPECT_EQ(G.order(), R->units().size());
      std::uint64_t prod = 1;
      for (std::size_t i = 0; i < G.generators.size(); ++i) {
        EXPECT_EQ(element_order(*R, G.generators[i]), G.orders[i]);
        prod *= G.orders[i];
      }
      EXPECT_EQ(prod, G.order());
      for (auto u : G.elements) {
        const auto c = G.coordinates(u);
        ResidueRing::Res back = R->one();
        for (std::size_t i = 0; i < c.size(); ++i) back = R->mul(back, R->pow(G.generators[i], c[i]));
        EXPECT_EQ(back, u);
      }
    }
  }
}

TEST(CharacterGroup, OneUnitDualHasOrderQPowM) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u})
    for (std::size_t m = 0; m <= 2; ++m) {
      const Field F = Field::of_order(q);
      const CharacterGroup G = CharacterGroup::trivial_on_scalars(ring_of(Poly::monomial(F, m + 1)));
      EXPECT_EQ(G.size(), oracle::ipow(q, m)) << q << " " << m;
      EXPECT_TRUE(G.is_trivial(0));
      for (std::size_t chi = 0; chi < G.size(); ++chi)
        for (Elem c = 1; c < q; ++c) EXPECT_EQ(G.value_exponent(chi, G.ring().scalar(c)), 0);
    }
}

TEST(CharacterGroup, HomomorphismAndGroupLaw) {
  const Field F = Field::of_order(4);
  const Ring R = ring_of(Poly(F, {1, 0, 1, 1}));
  const CharacterGroup G = CharacterGroup::full(R);
  const auto units = R->units();
  EXPECT_EQ(G.size(), units.size());
  const std::uint32_t N = G.root_order();
  for (std::size_t chi = 0; chi < G.size(); chi += 3) {
    for (std::size_t i = 0; i < units.size(); i += 4)
      for (std::size_t j = 0; j < units.size(); j += 5) {
        const auto a = units[i], b = units[j];
        EXPECT_EQ(G.value_exponent(chi, R->mul(a, b)),
                  (G.value_exponent(chi, a) + G.value_exponent(chi, b)) % N);
      }
    const std::size_t sq = G.power(chi, 2);
    for (std::size_t i = 0; i < units.size(); i += 7)
      EXPECT_EQ(G.value_exponent(sq, units[i]), 2 * G.value_exponent(chi, units[i]) % N);
    EXPECT_EQ(G.power(chi, G.order_of(chi)), 0u);
    EXPECT_EQ(G.product(chi, 0), chi);
  }
  EXPECT_EQ(G.value_exponent(1, 0), -1);  // zero residue is not a unit
}

TEST(CharacterSums, VanishPastTheModulusDegree) {
  for (std::uint32_t q : {3u, 5u}) {
    const Field F = Field::of_order(q);
    const Ring R = ring_of(Poly::monomial(F, 3));
    const CharacterGroup G = CharacterGroup::trivial_on_scalars(R);
    for (std::size_t chi = 1; chi < G.size(); ++chi)
      for (std::size_t k = 3; k <= 5; ++k) EXPECT_TRUE(M_k_sum(G, chi, k).is_zero()) << chi << " " << k;
  }
}

TEST(CharacterSums, HistogramRouteMatchesDirectSum) {
  const Field F = Field::of_order(4);
  const Ring R = ring_of(Poly(F, {1, 1, 1}));
  const CharacterGroup G = CharacterGroup::full(R);
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto hist = monic_residue_histogram(*R, k);
    std::uint64_t total = 0;
    for (auto v : hist) total += v;
    EXPECT_EQ(total, oracle::ipow(4, k));
    for (std::size_t chi = 0; chi < G.size(); ++chi) {
      EXPECT_TRUE(character_sum(G, chi, hist) == M_k_sum(G, chi, k));
      EXPECT_NEAR(std::abs(character_sum_float(G, chi, hist) - character_sum(G, chi, hist).embed()), 0, 1e-9);
    }
  }
}

// For an odd prime p the one-units modulo x^3 are isomorphic to (F_p^2, +) via
// 1 + a x + b x^2 -> (a, b - a^2/2), so their characters are
// zeta_p^{s a + t (b - a^2 / 2)}. Compare the multisets of (M_1, M_2).
TEST(CharacterSums, AgreeWithAdditiveModelModXCubed) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field F = Field::of_order(p);
    const CharacterGroup G = CharacterGroup::trivial_on_scalars(ring_of(Poly::monomial(F, 3)));
    const std::uint32_t half = (p + 1) / 2;
    auto zeta = [p](std::uint64_t e) {
      const double a = 2 * std::numbers::pi * static_cast<double>(e % p) / p;
      return std::complex<double>(std::cos(a), std::sin(a));
    };
    std::vector<std::array<double, 4>> model, lib;
    auto key = [](std::complex<double> m1, std::complex<double> m2) {
      auto r = [](double v) { return std::round(v * 1e6) / 1e6; };
      return std::array<double, 4>{r(m1.real()), r(m1.imag()), r(m2.real()), r(m2.imag())};
    };
    for (std::uint32_t s = 0; s < p; ++s)
      for (std::uint32_t t = 0; t < p; ++t) {
        std::complex<double> m[3];
        for (std::size_t k = 1; k <= 2; ++k)
          for (std::uint64_t gi = 0; gi < oracle::ipow(p, k); ++gi) {
            std::vector<std::uint32_t> g = oracle::nth_poly(gi, k, p);
            g.push_back(1);
            if (g[0] == 0) continue;
            const std::uint64_t inv0 = F.inv(g[0]);
            const std::uint64_t a = g[1] * inv0 % p, b = (k >= 2 ? g[2] : 0) * inv0 % p;
            const std::uint64_t a2h = a * a % p * half % p;
            m[k] += zeta(s * a + t * ((b + p - a2h) % p));
          }
        model.push_back(key(m[1], m[2]));
      }
    for (std::size_t chi = 0; chi < G.size(); ++chi)
      lib.push_back(key(M_k_sum(G, chi, 1).embed(), M_k_sum(G, chi, 2).embed()));
    std::sort(model.begin(), model.end());
    std::sort(lib.begin(), lib.end());
    EXPECT_EQ(model, lib) << "p=" << p;
  }
}

TEST(LFunction, ValueAtOneAndDegree) {
  const Field F = Field::of_order(5);
  const Ring R = ring_of(Poly::monomial(F, 3));
  const CharacterGroup G = CharacterGroup::trivial_on_scalars(R);
  EXPECT_THROW(l_function(G, 0), Error);
  for (std::size_t chi = 1; chi < G.size(); ++chi) {
    const LFunction L = l_function(G, chi);
    ASSERT_EQ(L.coeffs.size(), 3u);
    EXPECT_TRUE(L.at_one().is_zero());
    EXPECT_LE(L.degree(), 2u);
    EXPECT_TRUE(L.partial_sum(2) == L.at_one());
    std::int64_t one = 0;
    EXPECT_TRUE(L.coeffs[0].is_integer(&one));
    EXPECT_EQ(one, 1);
    EXPECT_LE(std::abs(L.coeffs[1].embed()), 2 * std::sqrt(5.0) + 1e-12);
  }
}

TEST(LFunction, RootsWithinSquareRoot) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const Field F = Field::of_order(q);
    const Ring R = ring_of(Poly(F, {1, 0, 1, 1}));
    const CharacterGroup G = CharacterGroup::full(R);
    for (std::size_t chi = 1; chi < G.size(); ++chi) {
      const WeilReport w = weil_check(l_function(G, chi), q);
      EXPECT_TRUE(w.pass) << "q=" << q << " chi=" << chi << " ratio=" << w.max_ratio;
      EXPECT_LT(w.residual, kWeilResidualLimit);
    }
  }
}

}  // namespace
