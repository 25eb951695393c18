#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace charp;
using namespace charp::testing;

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), PreconditionError);
  EXPECT_THROW(PrimeField(4), PreconditionError);
  EXPECT_THROW(PrimeField(0x80000000u), PreconditionError);
  EXPECT_NO_THROW(PrimeField(2147483647u));
}

TEST(PrimeField, ArithmeticAndFrobenius) {
  PrimeField f(7);
  EXPECT_EQ(f.mul(3, f.inv(3)), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  for (std::int64_t v = 0; v < 7; ++v) {
    FieldElement x(f, v);
    EXPECT_EQ(x.frobenius(), x);
  }
  EXPECT_THROW(f.inv(0), PreconditionError);
}

TEST(PolyRing, ValidatesNamesAndOrders) {
  EXPECT_THROW(ring(2, {"X", "X"}), PreconditionError);
  EXPECT_THROW(ring(2, {"1X"}), PreconditionError);
  EXPECT_THROW(ring(2, {}), PreconditionError);
  EXPECT_THROW(ring(2, {"X", "Y"}, MonomialOrder::block(2)), PreconditionError);
  EXPECT_THROW(ring(2, {"X", "Y"}, MonomialOrder::block(0)), PreconditionError);
  EXPECT_NO_THROW(ring(2, {"t", "X_1", "y2"}, MonomialOrder::block(1)));
}

TEST(MonomialOrder, Grevlex) {
  auto r = ring(2, {"X", "Y", "Z"});
  // grevlex: X^2 > XY > Y^2 > XZ > YZ > Z^2
  EXPECT_EQ(P(r, "Z^2 + Y*Z + X*Z + Y^2 + X*Y + X^2").to_string(), "X^2 + X*Y + Y^2 + X*Z + Y*Z + Z^2");
}

TEST(MonomialOrder, LexAndBlock) {
  auto lex = ring(2, {"X", "Y"}, MonomialOrder::lex());
  EXPECT_EQ(P(lex, "Y^5 + X").to_string(), "X + Y^5");
  auto block = ring(2, {"t", "X", "Y"}, MonomialOrder::block(1));
  EXPECT_EQ(P(block, "X^9 + t").to_string(), "t + X^9");
  EXPECT_EQ(P(block, "t*X + t*Y^2").to_string(), "t*Y^2 + t*X");
}

TEST(ParsePoly, SpecExamples) {
  auto wy = ring(2, {"W", "Y"});
  EXPECT_TRUE(P(wy, "0").is_zero());
  auto xy = ring(2, {"X", "Y"});
  EXPECT_TRUE(P(xy, "X + X").is_zero());
  EXPECT_EQ(P(xy, "(X+Y)^2"), P(xy, "X^2 + Y^2"));
  EXPECT_EQ(P(xy, "(X+Y)^2").to_string(), "X^2 + Y^2");
}

TEST(ParsePoly, LiteralsReduceModP) {
  auto r = ring(3, {"X"});
  EXPECT_EQ(P(r, "4*X"), P(r, "X"));
  EXPECT_EQ(P(r, "1000000000000000000000000000001"), P(r, "2"));
  EXPECT_EQ(P(r, "X - 2*X").to_string(), "2*X");
  EXPECT_EQ(P(r, "2^100"), P(r, "1"));
}

TEST(ParsePoly, Errors) {
  auto r = ring(2, {"X", "Y"});
  try {
    P(r, "X + Z");
    FAIL();
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.name(), "Z");
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P(r, "X +"), SyntaxError);
  EXPECT_THROW(P(r, "(X"), SyntaxError);
  EXPECT_THROW(P(r, "X Y"), SyntaxError);
  EXPECT_THROW(P(r, "-X"), SyntaxError);
  EXPECT_THROW(P(r, "X^"), SyntaxError);
  EXPECT_THROW(P(r, "X^1048577"), OverflowError);
  EXPECT_THROW(P(r, "X^99999999999999999999999"), OverflowError);
  EXPECT_THROW(P(r, "X^1048576 * X"), OverflowError);
  EXPECT_NO_THROW(P(r, "X^1048576"));
}

TEST(PolyArithmetic, AddExamples) {
  auto r = ring(2, {"X", "Y"});
  Polynomial f = P(r, "X^2 + Y");
  EXPECT_EQ(f + Polynomial(r), f);
  EXPECT_EQ(P(r, "X") + P(r, "Y"), P(r, "X + Y"));
  auto r3 = ring(3, {"X", "Y"});
  EXPECT_TRUE((P(r3, "2*X") + P(r3, "X")).is_zero());
}

TEST(PolyArithmetic, MulExamples) {
  auto r = ring(2, {"X", "Y"});
  Polynomial f = P(r, "X^2 + Y + 1");
  EXPECT_EQ(f * Polynomial::constant(r, 1), f);
  EXPECT_EQ((P(r, "X") * P(r, "Y")).to_string(), "X*Y");
  auto wy = ring(2, {"W", "Y"});
  EXPECT_EQ((P(wy, "Y") * P(wy, "W")).to_string(), "W*Y");
}

TEST(PolyArithmetic, RingMismatch) {
  auto a = ring(2, {"X", "Y"});
  auto b = ring(3, {"X", "Y"});
  EXPECT_THROW(P(a, "X") + P(b, "X"), RingMismatch);
  EXPECT_THROW(P(a, "X") * P(b, "X"), RingMismatch);
  // Structurally equal rings are interchangeable.
  auto a2 = ring(2, {"X", "Y"});
  EXPECT_EQ(P(a, "X") + P(a2, "Y"), P(a, "X + Y"));
}

TEST(PolyQPower, Examples) {
  auto r2 = ring(2, {"X", "Y"});
  Polynomial f = P(r2, "X*Y + X + 1");
  EXPECT_EQ(poly_q_power(f, 0), f);
  EXPECT_EQ(poly_q_power(P(r2, "X+Y"), 1), P(r2, "X^2 + Y^2"));
  auto r3 = ring(3, {"X", "Y"});
  EXPECT_EQ(poly_q_power(P(r3, "X+Y+1"), 1), P(r3, "X^3 + Y^3 + 1"));
  EXPECT_THROW(poly_q_power(P(r2, "X"), 21), OverflowError);
  EXPECT_EQ(poly_q_power(P(r2, "1"), 40), P(r2, "1"));
}

TEST(PolyDivide, ExactAndInexact) {
  auto r = ring(3, {"X", "Y"});
  Polynomial g = P(r, "X + 2*Y");
  Polynomial h = P(r, "X^2 + Y + 1");
  EXPECT_EQ(*(g * h).divide_exact(g), h);
  EXPECT_FALSE(P(r, "X^2 + 1").divide_exact(g).has_value());
  EXPECT_THROW((void)h.divide_exact(Polynomial(r)), PreconditionError);
}

// Property checks on seeded random inputs.

class PolyProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PolyProperties, PrintParseRoundTrip) {
  auto r = ring(GetParam(), {"X", "Y", "Z_1"});
  Generator gen(11 + GetParam());
  for (int k = 0; k < 200; ++k) {
    Polynomial f = gen.polynomial(r, 6, 7);
    EXPECT_EQ(parse_poly(f.to_string(), r), f) << f;
  }
}

TEST_P(PolyProperties, RingAxioms) {
  auto r = ring(GetParam(), {"X", "Y", "Z"});
  Generator gen(23 + GetParam());
  for (int k = 0; k < 100; ++k) {
    Polynomial a = gen.polynomial(r, 4, 3), b = gen.polynomial(r, 4, 3), c = gen.polynomial(r, 4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_P(PolyProperties, FrobeniusAdditive) {
  auto r = ring(GetParam(), {"X", "Y", "Z"});
  Generator gen(37 + GetParam());
  for (int k = 0; k < 60; ++k) {
    Polynomial f = gen.polynomial(r, 5, 4), g = gen.polynomial(r, 5, 4);
    for (unsigned e : {1u, 2u}) EXPECT_EQ((f + g).frobenius(e), f.frobenius(e) + g.frobenius(e));
  }
}

TEST_P(PolyProperties, QPowerMatchesRepeatedMultiplication) {
  const std::uint32_t p = GetParam();
  auto r = ring(p, {"X", "Y", "Z"});
  Generator gen(41 + p);
  for (int k = 0; k < 25; ++k) {
    Polynomial f = gen.polynomial(r, 8, 3);
    Polynomial repeated = f;
    for (unsigned e = 1; e <= 2; ++e) {
      repeated = naive_power(repeated, p);
      EXPECT_EQ(poly_q_power(f, e), repeated) << f;
    }
    EXPECT_EQ(f.pow(5), naive_power(f, 5));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, PolyProperties, ::testing::Values(2u, 3u, 5u));
