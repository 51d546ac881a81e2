#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rsdl/error.hpp"

using namespace rsdl;
using testing_helpers::gf_of;

namespace {

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, ArithmeticMatchesSchoolbookOracle) {
  const Field F = Field::of_order(GetParam());
  const auto G = gf_of(F);
  for (Elem a = 0; a < F.q(); ++a) {
    EXPECT_EQ(F.neg(a), G.neg(a));
    for (Elem b = 0; b < F.q(); ++b) {
      ASSERT_EQ(F.add(a, b), G.add(a, b)) << a << "+" << b;
      ASSERT_EQ(F.mul(a, b), G.mul(a, b)) << a << "*" << b;
      ASSERT_EQ(F.sub(a, b), G.sub(a, b));
    }
  }
}

TEST_P(FieldAxioms, InversesPowersAndGenerator) {
  const Field F = Field::of_order(GetParam());
  for (Elem a = 1; a < F.q(); ++a) {
    EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    EXPECT_EQ(F.div(a, a), 1u);
    EXPECT_EQ(F.pow(a, F.q() - 1), 1u);
  }
  const Elem g = F.primitive_element();
  std::vector<bool> seen(F.q(), false);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < F.q(); ++i) {
    EXPECT_FALSE(seen[x]);
    seen[x] = true;
    x = F.mul(x, g);
  }
  EXPECT_EQ(x, 1u);
  EXPECT_THROW(F.inv(0), Error);
}

TEST_P(FieldAxioms, DigitsAndCanonicalOrder) {
  const Field F = Field::of_order(GetParam());
  const auto els = F.elements();
  ASSERT_EQ(els.size(), F.q());
  for (Elem a = 0; a < F.q(); ++a) {
    EXPECT_EQ(els[a], a);
    const auto d = F.digits(a);
    Elem back = 0;
    for (std::uint32_t t = 0; t < F.e(); ++t) back = F.add(back, F.mul(d[t], F.basis(t)));
    EXPECT_EQ(back, a);
  }
  EXPECT_EQ(F.nonzero_elements().size(), F.q() - 1u);
  EXPECT_EQ(F.from_int(-1), F.neg(1));
  EXPECT_EQ(F.from_int(static_cast<std::int64_t>(F.p())), 0u);
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u));

bool has_root_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

TEST(Field, DefaultModulusIsFirstIrreducibleInIndexOrder) {
  // Degrees 2 and 3: irreducible iff no root.
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}}) {
    std::vector<std::uint32_t> expected;
    for (std::uint64_t idx = 0;; ++idx) {
      std::vector<std::uint32_t> m(e + 1);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < e; ++i) m[i] = static_cast<std::uint32_t>(v % p), v /= p;
      m[e] = 1;
      if (!has_root_mod_p(m, p)) {
        expected = m;
        break;
      }
    }
    EXPECT_EQ(Field::make(p, e).modulus(), expected) << p << "^" << e;
  }
}

TEST(Field, RejectsBadParameters) {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { Field::of_order(6); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::of_order(1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::make(4, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
  EXPECT_EQ(kind_of([] { Field::make(2, 30); }), ErrorKind::RangeError);
}

TEST(Field, ExplicitModulusChangesMultiplicationOnly) {
  const Field a = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});  // t^2 + 1
  const Field b = Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1});  // t^2 + t + 2
  EXPECT_FALSE(a == b);
  const Elem t = a.basis(1);
  EXPECT_EQ(a.mul(t, t), a.neg(1));
  for (Elem x = 0; x < 9; ++x)
    for (Elem y = 0; y < 9; ++y) EXPECT_EQ(a.add(x, y), b.add(x, y));
}

TEST(Field, PrimalityHelpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(401));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(221));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 0, 0, 1}, 2));   // x^4 + x + 1
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1, 0, 1}, 2));  // (x^2 + x + 1)^2
}

}  // namespace
