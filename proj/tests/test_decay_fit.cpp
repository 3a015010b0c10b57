#include "quasilab/decay_fit.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace quasilab;

namespace {

std::vector<double> sample(const std::vector<double>& h, double (*f)(double)) {
  std::vector<double> out;
  for (double x : h) out.push_back(f(x));
  return out;
}

}  // namespace

TEST(DecayFit, PurePowers) {
  const auto h = dyadic_ladder(4, 12);
  ASSERT_EQ(h.size(), 9u);
  EXPECT_DOUBLE_EQ(h.front(), 1.0 / 16.0);
  const auto fit2 = fit_decay_exponent(h, sample(h, [](double x) { return x * x; }));
  EXPECT_NEAR(fit2.exponent, 2.0, 1e-12);
  EXPECT_LT(fit2.residual, 1e-12);
  EXPECT_TRUE(fit2.reliable);
  const auto fit25 = fit_decay_exponent(h, sample(h, [](double x) { return 3.0 * std::pow(x, 2.5); }));
  EXPECT_NEAR(fit25.exponent, 2.5, 1e-12);
}

TEST(DecayFit, LowerOrderCorrection) {
  const auto h = dyadic_ladder(4, 12);
  const auto fit = fit_decay_exponent(h, sample(h, [](double x) { return x * x * (1.0 + x); }));
  EXPECT_GE(fit.exponent, 2.0);
  EXPECT_LE(fit.exponent, 2.1);
}

TEST(DecayFit, ZeroNormIsSuperpolynomial) {
  const auto h = dyadic_ladder(4, 8);
  std::vector<double> n = {1e-3, 1e-5, 0.0, 0.0, 0.0};
  const auto fit = fit_decay_exponent(h, n);
  EXPECT_TRUE(fit.superpolynomial);
  EXPECT_TRUE(std::isinf(fit.exponent));
}

TEST(DecayFit, NoisyDataIsFlaggedUnreliable) {
  const std::vector<double> h = {0.1, 0.05, 0.025, 0.0125};
  const std::vector<double> n = {1.0, 1e-4, 1.0, 1e-4};
  EXPECT_FALSE(fit_decay_exponent(h, n).reliable);
}

TEST(DecayFit, RejectsBadInput) {
  const std::vector<double> h3 = {0.1, 0.05, 0.025};
  EXPECT_THROW(fit_decay_exponent(h3, h3), std::invalid_argument);
  const std::vector<double> h = {0.1, 0.05, 0.025, 0.0125};
  EXPECT_THROW(fit_decay_exponent(h, std::vector<double>{1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(fit_decay_exponent(h, std::vector<double>{1, -1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(dyadic_ladder(5, 4), std::invalid_argument);
}
