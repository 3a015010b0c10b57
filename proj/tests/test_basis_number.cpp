#include "quasilab/basis_number.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace quasilab;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.5", "/3"}) EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(IrrationalityBasis, FirstElementMustBeOne) {
  EXPECT_NO_THROW(IrrationalityBasis({"1", "sqrt2"}, {1.0, std::sqrt(2.0)}));
  EXPECT_THROW(IrrationalityBasis({"sqrt2"}, {std::sqrt(2.0)}), std::invalid_argument);
  EXPECT_THROW(IrrationalityBasis({"1", "x"}, {1.0}), std::invalid_argument);
  EXPECT_EQ(IrrationalityBasis().dimension(), 1u);
}

TEST(BasisNumber, ArithmeticIsExact) {
  const BasisNumber a({Rational(1, 3), Rational(2)});
  const BasisNumber b({Rational(2, 3), Rational(-2)});
  EXPECT_EQ(a + b, BasisNumber::rational(1, 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * Rational(3), BasisNumber({Rational(1), Rational(6)}));
  EXPECT_EQ(-a, BasisNumber({Rational(-1, 3), Rational(-2)}));
}

TEST(BasisNumber, EqualityIsCoordinatewise) {
  // 1 + sqrt2 and the double 2.414... are different objects; only exact coordinates count.
  const BasisNumber a({Rational(1), Rational(1)});
  const BasisNumber b({Rational(1), Rational(1)});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, BasisNumber({Rational(1), Rational(0)}));
}

TEST(BasisNumber, ConvertsThroughDeclaredValues) {
  const IrrationalityBasis basis({"1", "sqrt2"}, {1.0, std::sqrt(2.0)});
  const BasisNumber a({Rational(3), Rational(2)});
  EXPECT_NEAR(a.to_double(basis), 3.0 + 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(FrequencyVector, DotIsExact) {
  const FrequencyVector omega = rational_frequencies({Rational(2), Rational(3)});
  EXPECT_TRUE(omega.dot({3, -2}).is_zero());
  EXPECT_EQ(omega.dot({1, 1}), BasisNumber::rational(5, 1));
  EXPECT_THROW(FrequencyVector(std::vector<BasisNumber>{}), std::invalid_argument);
  EXPECT_THROW(FrequencyVector({BasisNumber::zero(1), BasisNumber::zero(2)}), std::invalid_argument);
}
