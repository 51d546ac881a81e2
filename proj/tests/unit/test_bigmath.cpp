#include <gtest/gtest.h>

#include <cmath>

#include "../oracles.hpp"
#include "rsdl/bigmath.hpp"

using namespace rsdl;

namespace {

TEST(Binomial, ConventionsAndPascal) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(-2, 1), 0);
  for (long n = 1; n < 30; ++n)
    for (long r = 0; r <= n; ++r) {
      EXPECT_EQ(binomial(n, r), binomial(n - 1, r) + binomial(n - 1, r - 1));
      if (n < 20) EXPECT_EQ(binomial(n, r), oracle::choose(n, r));
    }
}

TEST(Binomial, FallingFactorialAndPowers) {
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(5, 3), 60);
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(rational_pow(5, -2), mpq_class(1, 25));
  EXPECT_EQ(rational_pow(5, 3), 125);
  for (long x = 0; x < 10; ++x)
    for (long r = 0; r <= x; ++r) EXPECT_EQ(falling_factorial(x, r), binomial(x, r) * factorial(r));
}

TEST(UpperReal, SquareRootsRoundUp) {
  const unsigned bits = 128;
  EXPECT_EQ(UpperReal::sqrt_of(49, bits).compare(mpq_class(7)), 0);
  for (unsigned long n : {2ul, 3ul, 5ul, 8ul, 1000003ul}) {
    const UpperReal s = UpperReal::sqrt_of(n, bits);
    EXPECT_GE((s * s).compare(mpq_class(n)), 0) << n;
    EXPECT_GE(s.to_double(), std::sqrt(static_cast<double>(n)) * (1 - 1e-15));
    EXPECT_LE(s.to_double(), std::sqrt(static_cast<double>(n)) * (1 + 1e-15));
  }
}

TEST(UpperReal, IntegerArgumentsAreExact) {
  const unsigned bits = 128;
  for (unsigned long a = 0; a < 25; ++a)
    for (unsigned long j = 0; j <= a; ++j) {
      const UpperReal b = binomial_up(UpperReal::from_ulong(a, bits), j);
      EXPECT_EQ(b.compare(mpq_class(binomial(static_cast<long>(a), static_cast<long>(j)))), 0) << a << " " << j;
      const UpperReal f = falling_up(UpperReal::from_ulong(a, bits), j);
      EXPECT_EQ(f.compare(mpq_class(falling_factorial(static_cast<long>(a), static_cast<long>(j)))), 0);
    }
}

TEST(UpperReal, RealBinomialAgreesWithGamma) {
  const unsigned bits = 128;
  for (unsigned long n : {2ul, 5ul, 7ul, 11ul})
    for (unsigned long j = 0; j < 6; ++j) {
      const UpperReal a = UpperReal::sqrt_of(n, bits) * 3ul + 4ul;  // 3 sqrt(n) + 4
      const double x = 3 * std::sqrt(static_cast<double>(n)) + 4;
      const double up = binomial_up(a, j).to_double();
      const double g = binomial_gamma(x, static_cast<double>(j));
      EXPECT_GE(up, g * (1 - 1e-12));
      EXPECT_NEAR(up / g, 1.0, 1e-12);
    }
}

TEST(UpperReal, ArithmeticIsMonotone) {
  const unsigned bits = 64;
  const UpperReal third = UpperReal::from_ulong(1, bits) / 3ul;
  EXPECT_GT(third.compare(mpq_class(1, 3)), 0);
  EXPECT_GE((third * 3ul).compare(mpq_class(1)), 0);
  EXPECT_EQ(UpperReal::from_ulong(10, bits).minus(3).compare(mpq_class(7)), 0);
  EXPECT_EQ(UpperReal::from_ulong(3, bits).pow(4).compare(mpq_class(81)), 0);
  EXPECT_TRUE(UpperReal(bits).is_zero());
  EXPECT_EQ(UpperReal::from_ulong(2, bits).to_string(3).substr(0, 4), "2.00");
}

}  // namespace
