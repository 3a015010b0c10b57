#include "quasilab/trig_polynomial.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace quasilab;
using quasilab::testing::naive_evaluate;
using quasilab::testing::random_polynomial;

TEST(TrigPolynomial, ZeroCoefficientsAreNotStored) {
  TrigPolynomial p(2);
  p.set({1, 0}, 2.0);
  p.add({1, 0}, -2.0);
  EXPECT_TRUE(p.empty());
  p.set({0, 1}, 0.0);
  EXPECT_TRUE(p.empty());
  EXPECT_THROW(p.set({1}, 1.0), std::invalid_argument);
}

TEST(TrigPolynomial, NormIsCoefficientNorm) {
  TrigPolynomial p(1);
  p.set({0}, 3.0);
  p.set({4}, Complex(0.0, 4.0));
  EXPECT_DOUBLE_EQ(p.l2_norm(), 5.0);
  EXPECT_EQ(p.support_radius(), 4);
}

TEST(TrigPolynomial, NormMatchesQuadrature) {
  std::mt19937_64 rng(1);
  const auto p = random_polynomial(rng, 2, 3, 12);
  // Equispaced quadrature with more points than twice the radius is exact for |p|^2.
  const std::size_t g = 16;
  double sum = 0.0;
  for (std::size_t j = 0; j < g * g; ++j) sum += std::norm(naive_evaluate(p, quasilab::testing::grid_node(j, 2, g)));
  EXPECT_NEAR(std::sqrt(sum / (g * g)), p.l2_norm(), 1e-12 * p.l2_norm());
}

TEST(TrigPolynomial, ConvolutionIsPointwiseProduct) {
  std::mt19937_64 rng(2);
  const auto a = random_polynomial(rng, 2, 3, 8);
  const auto b = random_polynomial(rng, 2, 2, 6);
  const auto c = convolve(a, b);
  for (const std::vector<double>& x : {std::vector<double>{0.1, 0.7}, {0.33, 0.25}, {0.9, 0.05}})
    EXPECT_LT(std::abs(naive_evaluate(c, x) - naive_evaluate(a, x) * naive_evaluate(b, x)), 1e-11);
}

TEST(TrigPolynomial, RealPartAndRealityTest) {
  TrigPolynomial p(1);
  p.set({1}, Complex(1.0, 2.0));
  EXPECT_FALSE(p.is_real());
  const auto r = p.real_part();
  EXPECT_TRUE(r.is_real());
  for (double x : {0.0, 0.2, 0.71})
    EXPECT_NEAR(naive_evaluate(r, {x}).real(), naive_evaluate(p, {x}).real(), 1e-14);
  EXPECT_NEAR(naive_evaluate(r, {0.3}).imag(), 0.0, 1e-15);
}

TEST(TrigPolynomial, TruncationAndInnerProduct) {
  TrigPolynomial p(1);
  p.set({0}, 1.0);
  p.set({3}, 1e-16);
  EXPECT_EQ(p.truncated(1e-14).size(), 1u);
  TrigPolynomial q(1);
  q.set({0}, Complex(0.0, 1.0));
  EXPECT_EQ(p.inner(q), Complex(0.0, -1.0));
}
