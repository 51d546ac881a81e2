#include <gtest/gtest.h>

#include <functional>

#include "rsdl/parse.hpp"

using namespace rsdl;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

TEST(ParseField, Forms) {
  EXPECT_EQ(parse_field("q=5").q(), 5u);
  const Field f9 = parse_field("q=9");
  EXPECT_EQ(f9.p(), 3u);
  EXPECT_EQ(f9.e(), 2u);
  EXPECT_EQ(parse_field("q=3^2"), f9);
  const Field custom = parse_field("q=3^2 mod=x^2+1");
  EXPECT_EQ(custom.modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(parse_field("q=9; mod=x^2+1"), custom);
  EXPECT_EQ(parse_field(custom.describe()), custom);
  EXPECT_EQ(parse_field(Field::of_order(8).describe()), Field::of_order(8));
}

TEST(ParseField, Errors) {
  EXPECT_EQ(kind_of([] { parse_field("5"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field("q="); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field("q=5 extra"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_field("q=6"); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { parse_field("q=2^2 mod=x^2+1"); }), ErrorKind::ReducibleModulus);
}

TEST(ParsePoly, Grammar) {
  const Field F = Field::of_order(5);
  EXPECT_EQ(parse_poly("x^3", F), Poly::monomial(F, 3));
  EXPECT_EQ(parse_poly("2*x^2 + 3x + 1", F), Poly(F, {1, 3, 2}));
  EXPECT_EQ(parse_poly("x - 1", F), Poly(F, {4, 1}));
  EXPECT_EQ(parse_poly("-x", F), Poly(F, {0, 4}));
  EXPECT_EQ(parse_poly("x + x", F), Poly(F, {0, 2}));
  EXPECT_EQ(parse_poly("[1,0,2]", F), Poly(F, {1, 0, 2}));
  EXPECT_EQ(parse_poly("[]", F), Poly(F));
  EXPECT_EQ(parse_poly("0", F), Poly(F));
  // Coefficients of extension fields are element indices.
  const Field F4 = Field::of_order(4);
  EXPECT_EQ(parse_poly("3*x + 2", F4), Poly(F4, {2, 3}));
}

TEST(ParsePoly, Errors) {
  const Field F = Field::of_order(5);
  for (const char* bad : {"", "x^", "5*x", "x +", "[1,2", "y", "x^2 x"})
    EXPECT_EQ(kind_of([&] { parse_poly(bad, F); }), ErrorKind::ParseError) << bad;
}

TEST(ParseLists, ElementsAndIntegers) {
  const Field F = Field::of_order(4);
  EXPECT_EQ(parse_elements("[0,3,1]", F), (std::vector<Elem>{0, 3, 1}));
  EXPECT_EQ(parse_elements("0, 3, 1", F), (std::vector<Elem>{0, 3, 1}));
  EXPECT_EQ(kind_of([&] { parse_elements("4", F); }), ErrorKind::ParseError);
  EXPECT_EQ(parse_uint_list("101,211"), (std::vector<std::uint64_t>{101, 211}));
  EXPECT_EQ(kind_of([] { parse_uint_list("1,,2"); }), ErrorKind::ParseError);
}

}  // namespace
