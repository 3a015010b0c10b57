#include "quasilab/int_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quasilab;

namespace {

// Column HNF as documented: nonzero columns first, strictly increasing pivot
// rows, positive pivots, zeros above each pivot, reduced entries to its left.
bool is_column_hnf(const IntMatrix& h, std::size_t rank) {
  std::size_t last_pivot = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    if (j >= rank) {
      if (!h.is_zero_column(j)) return false;
      continue;
    }
    std::size_t p = 0;
    while (p < h.rows() && h(p, j) == 0) ++p;
    if (p == h.rows()) return false;
    if (j > 0 && p <= last_pivot) return false;
    if (h(p, j) <= 0) return false;
    for (std::size_t l = 0; l < j; ++l)
      if (h(p, l) < 0 || h(p, l) >= h(p, j)) return false;
    last_pivot = p;
  }
  return true;
}

bool unimodular(const IntMatrix& u) {
  const Integer d = u.determinant();
  return d == 1 || d == -1;
}

}  // namespace

TEST(HermiteNormalForm, IdentityIsFixed) {
  const auto r = hermite_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(r.H, IntMatrix::identity(2));
  EXPECT_EQ(r.U, IntMatrix::identity(2));
  EXPECT_EQ(r.rank, 2u);
}

TEST(HermiteNormalForm, SingleColumnIsKept) {
  const IntMatrix a{{2}, {3}};
  const auto r = hermite_normal_form(a);
  EXPECT_EQ(r.H, a);
  EXPECT_EQ(r.U, IntMatrix{{1}});
}

TEST(HermiteNormalForm, SingleColumnSignIsNormalized) {
  const auto r = hermite_normal_form(IntMatrix{{-2}, {3}});
  EXPECT_EQ(r.H, (IntMatrix{{2}, {-3}}));
  EXPECT_EQ(r.U, IntMatrix{{-1}});
}

TEST(HermiteNormalForm, MatchesBruteForceUnimodularSearch) {
  const IntMatrix a{{2, 1}, {3, 2}};
  const auto r = hermite_normal_form(a);
  EXPECT_EQ(r.H.determinant() * r.H.determinant(), a.determinant() * a.determinant());

  // Every U with entries in [-3, 3] and det +-1: exactly one A*U is in HNF.
  std::vector<IntMatrix> found;
  for (int a00 = -3; a00 <= 3; ++a00)
    for (int a01 = -3; a01 <= 3; ++a01)
      for (int a10 = -3; a10 <= 3; ++a10)
        for (int a11 = -3; a11 <= 3; ++a11) {
          const IntMatrix u{{a00, a01}, {a10, a11}};
          if (!unimodular(u)) continue;
          const IntMatrix h = a * u;
          if (is_column_hnf(h, 2)) found.push_back(h);
        }
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(r.H, found.front());
}

TEST(HermiteNormalForm, PropertiesOnRandomMatrices) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(size(rng));
    const auto cols = static_cast<std::size_t>(size(rng));
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
    const auto r = hermite_normal_form(a);
    EXPECT_EQ(a * r.U, r.H);
    EXPECT_TRUE(unimodular(r.U));
    EXPECT_TRUE(is_column_hnf(r.H, r.rank)) << a.to_string() << " -> " << r.H.to_string();
    // Idempotent on its own output.
    EXPECT_EQ(hermite_normal_form(r.H).H, r.H);
  }
}

TEST(IntMatrix, DeterminantAndInverse) {
  const IntMatrix m{{2, 1, 0}, {3, 2, 0}, {1, 1, 1}};
  EXPECT_EQ(m.determinant(), 1);
  EXPECT_EQ(m * unimodular_inverse(m), IntMatrix::identity(3));
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
  EXPECT_THROW(unimodular_inverse(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(IntMatrix, MultiplyOverBasis) {
  const IntMatrix m{{2, -1}, {-3, 2}};
  const auto out = multiply(m, {BasisNumber::rational(2, 1), BasisNumber::rational(3, 1)});
  EXPECT_EQ(out[0], BasisNumber::rational(1, 1));
  EXPECT_TRUE(out[1].is_zero());
}
