#pragma once

#include "quasilab/basis_number.hpp"
#include "quasilab/lattice.hpp"
#include "quasilab/nondegeneracy.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <Eigen/Dense>

#include <optional>

namespace quasilab {

/// Concrete bounded realization of the third-order remainder:
///   h^3 * (scale / (1 + |alpha|^2)) u_hat(alpha)  +  h^3 * (potential * u).
struct RemainderModel {
  double multiplier_scale = 1.0;
  TrigPolynomial potential{1};

  double multiplier(const Multiindex& alpha) const;
};

/// Model operator on the n-torus with D_j e_alpha = alpha_j e_alpha:
///   P = h (omega . D + c) + h^2 D^T H D + h^2 r(x) [+ remainder].
struct ModelOperatorSpec {
  FrequencyVector omega;
  IrrationalityBasis basis;
  HessianForm hessian{Eigen::MatrixXd::Identity(1, 1)};
  BasisNumber c;
  TrigPolynomial r{1};
  std::optional<RemainderModel> remainder;

  std::size_t dimension() const { return omega.dimension(); }
  /// Throws std::invalid_argument on dimension mismatch, non-real r or remainder potential.
  void validate() const;
};

/// (Pu) for finitely supported u. Irrational constants omega . alpha + c are
/// reduced exactly and only converted to floating point at the end.
TrigPolynomial apply_model_operator(const ModelOperatorSpec& spec, const TrigPolynomial& u, double h);

/// The form xi^T H xi rewritten in the dual coordinates of x = M (y, z):
///   Q = sum rho1 D_y D_y + sum rho2 D_y D_z + sum Omega D_z D_z.
/// rho2 carries the full cross coefficient (twice the off-diagonal block).
struct TransformedQuadraticForm {
  Eigen::MatrixXd full;         ///< M^{-1} H M^{-T}
  Eigen::MatrixXd rho1;         ///< k x k
  Eigen::MatrixXd rho2;         ///< k x (n-k)
  Eigen::MatrixXd omega_block;  ///< (n-k) x (n-k)
  double max_invariance_error = 0.0;

  std::size_t k() const { return static_cast<std::size_t>(rho1.rows()); }
  std::size_t complement_dimension() const { return static_cast<std::size_t>(omega_block.rows()); }
  bool omega_block_positive_definite() const;
};

TransformedQuadraticForm transform_quadratic_form(const HessianForm& h, const UnimodularSplitting& split);

/// Q_alpha + r0 on the complementary torus T':
///   symbol(beta) = beta^T Omega beta + gamma . beta + rho.
struct OperatorOnTPrime {
  Eigen::MatrixXd omega_block;
  Eigen::VectorXd gamma;
  double rho = 0.0;
  TrigPolynomial zero_mode_multiplier{1};

  std::size_t dimension() const { return static_cast<std::size_t>(omega_block.rows()); }
  double symbol(const Multiindex& beta) const;
  TrigPolynomial apply(const TrigPolynomial& w) const;
};

OperatorOnTPrime assemble_Q_alpha(const TransformedQuadraticForm& form, const Multiindex& alpha,
                                  const TrigPolynomial& r0_hat);

/// Integer matrix as doubles.
Eigen::MatrixXd to_eigen(const IntMatrix& m);

}  // namespace quasilab
