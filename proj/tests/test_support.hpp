#pragma once

// Oracles and generators shared by the tests. Nothing here calls into FFTW or
// the normal-form code, so the checks stay independent of the library.

#include "quasilab/basis_number.hpp"
#include "quasilab/lattice.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace quasilab::testing {

/// Direct sum of the series at x.
inline Complex naive_evaluate(const TrigPolynomial& p, const std::vector<double>& x) {
  Complex sum{};
  for (const auto& [alpha, c] : p) {
    double phase = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) phase += static_cast<double>(alpha[i]) * x[i];
    sum += c * std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  return sum;
}

/// Grid node j (row-major, last axis fastest) of the uniform grid with g points per axis.
inline std::vector<double> grid_node(std::size_t flat, std::size_t dim, std::size_t g) {
  std::vector<double> x(dim);
  for (std::size_t i = dim; i-- > 0;) {
    x[i] = static_cast<double>(flat % g) / static_cast<double>(g);
    flat /= g;
  }
  return x;
}

inline std::size_t grid_count(std::size_t dim, std::size_t g) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= g;
  return n;
}

/// Naive forward DFT: coefficient at alpha of the grid samples.
inline Complex naive_coefficient(const std::vector<Complex>& samples, std::size_t dim, std::size_t g,
                                 const Multiindex& alpha) {
  Complex sum{};
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const auto x = grid_node(j, dim, g);
    double phase = 0.0;
    for (std::size_t i = 0; i < dim; ++i) phase += static_cast<double>(alpha[i]) * x[i];
    sum += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * phase);
  }
  return sum / static_cast<double>(samples.size());
}

/// Every multiindex with entries in [-r, r].
inline std::vector<Multiindex> box(std::size_t dim, std::int64_t r) {
  std::vector<Multiindex> out;
  Multiindex a(dim, -r);
  while (true) {
    out.push_back(a);
    std::size_t i = dim;
    while (i > 0 && a[i - 1] == r) a[--i] = -r;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

inline TrigPolynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, std::int64_t radius,
                                        std::size_t terms, bool real = false) {
  std::uniform_int_distribution<std::int64_t> idx(-radius, radius);
  std::normal_distribution<double> val;
  TrigPolynomial p(dim);
  for (std::size_t t = 0; t < terms; ++t) {
    Multiindex a(dim);
    for (auto& x : a) x = idx(rng);
    const Complex c(val(rng), real ? 0.0 : val(rng));
    p.add(a, c);
    if (real) {
      Multiindex neg(a);
      for (auto& x : neg) x = -x;
      p.add(neg, std::conj(c));
    }
  }
  return p;
}

inline Rational random_rational(std::mt19937_64& rng, int max_den = 20, int max_num = 40) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Declared basis {1, sqrt 2, sqrt 3, sqrt 5, sqrt 7}, truncated to m elements.
inline IrrationalityBasis surd_basis(std::size_t m) {
  std::vector<std::string> names = {"1", "sqrt2", "sqrt3", "sqrt5", "sqrt7"};
  std::vector<double> values = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0)};
  names.resize(m);
  values.resize(m);
  return IrrationalityBasis(names, values);
}

/// omega_i = sum_t B[i][t] q_t b_t with B in {-1,0,1} and nonzero rational q_t
/// (denominators <= 20). The relation lattice is the integer kernel of B^T, whose
/// rational span is generated by vectors with entries bounded by small minors,
/// so enumeration over |alpha|_inf <= 6 sees its full rank when n <= 4.
struct StructuredOmega {
  FrequencyVector omega;
  std::size_t basis_dimension;
};

inline StructuredOmega random_structured_omega(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> entry(-1, 1);
  std::vector<Rational> q;
  for (std::size_t t = 0; t < m; ++t) {
    Rational r = 0;
    while (r == 0) r = random_rational(rng);
    q.push_back(r);
  }
  while (true) {
    std::vector<BasisNumber> entries;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> coeffs(m);
      for (std::size_t t = 0; t < m; ++t) coeffs[t] = q[t] * entry(rng);
      entries.emplace_back(coeffs);
    }
    FrequencyVector omega(entries);
    if (!omega.is_zero()) return {omega, m};
  }
}

/// Brute-force relations alpha . omega = 0 with |alpha|_inf <= r, alpha != 0.
inline std::vector<Multiindex> brute_force_relations(const FrequencyVector& omega, std::int64_t r) {
  std::vector<Multiindex> out;
  for (const auto& a : box(omega.dimension(), r)) {
    bool zero_vec = true;
    for (auto x : a) zero_vec = zero_vec && x == 0;
    if (!zero_vec && omega.dot(a).is_zero()) out.push_back(a);
  }
  return out;
}

/// Rank of a set of integer vectors, by exact rational elimination.
inline std::size_t rational_rank(const std::vector<Multiindex>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace quasilab::testing
