#pragma once

#include "quasilab/lattice.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <span>

namespace quasilab {

using Complex = std::complex<double>;

/// Finitely supported Fourier series sum_alpha c_alpha e_alpha(x) on R^n / Z^n
/// with e_alpha(x) = exp(2 pi i alpha . x). Zero coefficients are never stored,
/// and the L2 norm is the l2 norm of the coefficients.
class TrigPolynomial {
 public:
  using Coefficients = std::map<Multiindex, Complex>;

  explicit TrigPolynomial(std::size_t dim = 1) : dim_(dim) {}

  static TrigPolynomial character(const Multiindex& alpha, Complex value = 1.0);
  static TrigPolynomial constant(std::size_t dim, Complex value);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  const Coefficients& coefficients() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  Complex coefficient(const Multiindex& alpha) const;
  void set(const Multiindex& alpha, Complex value);
  void add(const Multiindex& alpha, Complex value);

  double l2_norm() const;
  double max_abs_coefficient() const;
  /// <this, other> = sum_alpha this_alpha * conj(other_alpha)
  Complex inner(const TrigPolynomial& other) const;
  Complex evaluate(std::span<const double> x) const;

  /// max_alpha |alpha|_inf over the support (0 when empty).
  std::int64_t support_radius() const;
  /// True when c(-alpha) == conj(c(alpha)) up to tol * max|c|, i.e. the function is real.
  bool is_real(double tol = 1e-12) const;
  /// Projects onto real-valued functions: (c(a) + conj c(-a)) / 2.
  TrigPolynomial real_part() const;
  /// Drops coefficients with |c| < threshold.
  TrigPolynomial truncated(double threshold) const;

  TrigPolynomial& operator+=(const TrigPolynomial& other);
  TrigPolynomial& operator-=(const TrigPolynomial& other);
  TrigPolynomial& operator*=(Complex s);
  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
  friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }
  friend TrigPolynomial operator*(TrigPolynomial a, Complex s) { return a *= s; }
  friend TrigPolynomial operator*(Complex s, TrigPolynomial a) { return a *= s; }

  bool operator==(const TrigPolynomial&) const = default;

 private:
  std::size_t dim_;
  Coefficients coeffs_;
};

/// Exact discrete convolution of two finite supports: the product of the functions.
TrigPolynomial convolve(const TrigPolynomial& a, const TrigPolynomial& b);

Multiindex operator+(const Multiindex& a, const Multiindex& b);
Multiindex operator-(const Multiindex& a, const Multiindex& b);

}  // namespace quasilab
