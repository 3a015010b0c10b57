#include "quasilab/maslov.hpp"

#include <gtest/gtest.h>

using namespace quasilab;

TEST(Maslov, ExactQuantization) {
  // lambda / (2 pi h) - m / 4 with lambda = 2 pi * 1/4 and m = 1 at h = 1: 1/4 - 1/4 = 0.
  EXPECT_TRUE(maslov_admissible({Rational(1, 4)}, {Integer(1)}, Rational(1)));
  // Halving h doubles the first term: 1/2 - 1/4 is not an integer.
  EXPECT_FALSE(maslov_admissible({Rational(1, 4)}, {Integer(1)}, Rational(1, 2)));
  EXPECT_TRUE(maslov_admissible({Rational(3, 4), Rational(1)}, {Integer(4), Integer(0)}, Rational(1, 4)));
  EXPECT_FALSE(maslov_admissible({Rational(3, 4), Rational(1, 3)}, {Integer(4), Integer(0)}, Rational(1, 4)));
}

TEST(Maslov, AdmissibleLadderIsPeriodic) {
  // lambda = 2 pi * 5/4, m = 1: admissible exactly when 5/(4h) - 1/4 is an integer.
  for (int j = 1; j <= 20; ++j) {
    const Rational h(5, 4 * j + 1);
    EXPECT_TRUE(maslov_admissible({Rational(5, 4)}, {Integer(1)}, h)) << j;
  }
  EXPECT_FALSE(maslov_admissible({Rational(5, 4)}, {Integer(1)}, Rational(1, 2)));
}

TEST(Maslov, EmptyCycleListIsAdmissible) { EXPECT_TRUE(maslov_admissible({}, {}, Rational(1, 3))); }

TEST(Maslov, RejectsBadInput) {
  EXPECT_THROW(maslov_admissible({Rational(1)}, {Integer(0)}, Rational(0)), std::invalid_argument);
  EXPECT_THROW(maslov_admissible({Rational(1)}, {Integer(0)}, Rational(-1, 2)), std::invalid_argument);
  EXPECT_THROW(maslov_admissible({Rational(1)}, {}, Rational(1)), std::invalid_argument);
}

TEST(Maslov, ZeroClassesAndIntegerPeriods) {
  EXPECT_TRUE(maslov_admissible({Rational(0)}, {Integer(0)}, Rational(7, 3)));
  EXPECT_TRUE(maslov_admissible({Rational(1)}, {Integer(0)}, Rational(1, 5)));
  EXPECT_FALSE(maslov_admissible({Rational(1)}, {Integer(1)}, Rational(1, 5)));
}
