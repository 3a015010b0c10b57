#pragma once

#include "quasilab/model_operator.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <Eigen/Dense>

#include <vector>

namespace quasilab {

inline constexpr double kDefaultNullTol = 1e-8;

/// Spectral Galerkin discretization of L = Q_alpha + r0 on the characters
/// {e_beta : |beta|_inf <= N} of T'. The matrix is Hermitian when r0 is real.
class GalerkinProblem {
 public:
  GalerkinProblem(const OperatorOnTPrime& op, int truncation);

  int truncation() const { return truncation_; }
  const std::vector<Multiindex>& modes() const { return modes_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  /// Gershgorin bound on the operator norm; eigenvalues are reported divided by it.
  double scale() const { return scale_; }

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }  ///< unscaled, ascending
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

  Eigen::VectorXcd to_vector(const TrigPolynomial& w) const;
  TrigPolynomial to_polynomial(const Eigen::VectorXcd& v) const;

 private:
  int truncation_;
  std::vector<Multiindex> modes_;
  Eigen::MatrixXcd matrix_;
  double scale_ = 1.0;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

struct GalerkinNullspace {
  int truncation = 0;
  double null_tol = kDefaultNullTol;
  double scale = 1.0;
  std::vector<TrigPolynomial> basis;  ///< orthonormal
  std::vector<double> eigenvalues;    ///< scaled, |lambda| < null_tol
  std::vector<double> near_zero_spectrum;  ///< smallest scaled |eigenvalues| (up to 8), ascending by modulus

  std::size_t dimension() const { return basis.size(); }
};

/// Retains the Galerkin eigenvectors whose scaled eigenvalue is below null_tol.
/// Throws std::invalid_argument when Omega is not positive definite, N < 4, or
/// the window cannot represent r0 (tail of r0 beyond offset 2N-2 exceeds null_tol).
GalerkinNullspace galerkin_nullspace(const OperatorOnTPrime& op, int truncation, double null_tol = kDefaultNullTol);

struct RangeSolution {
  TrigPolynomial w{1};
  bool ill_conditioned = false;
  double smallest_retained = 0.0;  ///< scaled modulus of the smallest non-null eigenvalue
};

/// Minimal-norm Galerkin solution of L w = pi_{Ran L} g, orthogonal to the nullspace.
RangeSolution solve_on_range(const OperatorOnTPrime& op, const GalerkinNullspace& null, const TrigPolynomial& g);

/// Axis-aligned box prod [lower_i, upper_i] in T' coordinates.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  double volume() const;
};

struct UniqueContinuationResult {
  double constant = 0.0;   ///< min over unit f in the nullspace of int_box |f|^2
  TrigPolynomial minimizer{1};
};

/// Smallest eigenvalue of the Gram matrix int_box f_i conj(f_j) over the
/// orthonormal nullspace basis. Integrals of characters are evaluated in closed form.
UniqueContinuationResult unique_continuation_constant(const GalerkinNullspace& null, const Box& box);

}  // namespace quasilab
