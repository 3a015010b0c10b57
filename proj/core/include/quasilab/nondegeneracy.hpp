#pragma once

#include <Eigen/Dense>

namespace quasilab {

/// Second derivatives of the principal symbol in the action variables,
/// evaluated on the invariant torus. Symmetric up to 1e-12 relative.
class HessianForm {
 public:
  explicit HessianForm(Eigen::MatrixXd entries);

  Eigen::Index dimension() const { return entries_.rows(); }
  const Eigen::MatrixXd& matrix() const { return entries_; }
  double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::MatrixXd entries_;
};

/// The (n+1)x(n+1) matrix [[H, omega], [omega^T, 0]].
Eigen::MatrixXd bordered_matrix(const HessianForm& h, const Eigen::VectorXd& omega);

struct BorderedDeterminant {
  double det = 0.0;
  /// sigma_min / sigma_max of the bordered matrix.
  double singular_ratio = 0.0;
  /// The power bound 1e-9 * (max-norm)^(n+1); reported for comparison, not used to decide.
  double power_bound = 0.0;
  bool nondegenerate = false;
};

/// Isoenergetic nondegeneracy test: the bordered matrix has full numerical
/// rank, sigma_min > 1e-9 * sigma_max. Invariant under scaling and under
/// simultaneous orthogonal change of H and omega.
BorderedDeterminant bordered_determinant(const HessianForm& h, const Eigen::VectorXd& omega);

/// Orthonormal basis (as columns) of the orthogonal complement of omega,
/// built from the Householder reflection taking omega/|omega| to a coordinate axis.
Eigen::MatrixXd orthocomplement_basis(const Eigen::VectorXd& omega);

struct QuasiconvexityResult {
  bool quasiconvex = false;
  double min_eigenvalue = 0.0;  ///< of B^T H B, B spanning omega-perp (+inf when n = 1)
  double threshold = 0.0;       ///< 1e-9 * max|H|
};

QuasiconvexityResult quasiconvexity(const HessianForm& h, const Eigen::VectorXd& omega);

inline bool is_quasiconvex(const HessianForm& h, const Eigen::VectorXd& omega) {
  return quasiconvexity(h, omega).quasiconvex;
}

}  // namespace quasilab
