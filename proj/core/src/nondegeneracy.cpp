#include "quasilab/nondegeneracy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace quasilab {

namespace {
constexpr double kSymmetryTol = 1e-12;
constexpr double kDetTol = 1e-9;
constexpr double kPdTol = 1e-9;
}  // namespace

HessianForm::HessianForm(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw std::invalid_argument("Hessian must be a nonempty square matrix");
  const double scale = entries_.cwiseAbs().maxCoeff();
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) throw std::invalid_argument("Hessian is not symmetric");
}

Eigen::MatrixXd bordered_matrix(const HessianForm& h, const Eigen::VectorXd& omega) {
  const Eigen::Index n = h.dimension();
  if (omega.size() != n) throw std::invalid_argument("bordered matrix: dimension mismatch");
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n + 1, n + 1);
  b.topLeftCorner(n, n) = h.matrix();
  b.block(0, n, n, 1) = omega;
  b.block(n, 0, 1, n) = omega.transpose();
  return b;
}

BorderedDeterminant bordered_determinant(const HessianForm& h, const Eigen::VectorXd& omega) {
  Eigen::MatrixXd b = bordered_matrix(h, omega);
  BorderedDeterminant out;
  out.det = b.fullPivLu().determinant();
  const double scale = b.cwiseAbs().maxCoeff();
  out.power_bound = kDetTol * std::pow(scale, static_cast<double>(b.rows()));
  const Eigen::VectorXd sigma = Eigen::JacobiSVD<Eigen::MatrixXd>(b).singularValues();
  out.singular_ratio = sigma(0) > 0.0 ? sigma(sigma.size() - 1) / sigma(0) : 0.0;
  out.nondegenerate = out.singular_ratio > kDetTol;
  return out;
}

Eigen::MatrixXd orthocomplement_basis(const Eigen::VectorXd& omega) {
  const Eigen::Index n = omega.size();
  const double norm = omega.norm();
  if (n == 0 || norm == 0.0) throw std::invalid_argument("orthocomplement of a zero vector");
  Eigen::VectorXd u = omega / norm;
  Eigen::VectorXd v = u;
  v(0) += u(0) >= 0.0 ? 1.0 : -1.0;
  Eigen::MatrixXd reflection =
      Eigen::MatrixXd::Identity(n, n) - 2.0 * (v * v.transpose()) / v.squaredNorm();
  return reflection.rightCols(n - 1);
}

QuasiconvexityResult quasiconvexity(const HessianForm& h, const Eigen::VectorXd& omega) {
  if (omega.size() != h.dimension()) throw std::invalid_argument("quasiconvexity: dimension mismatch");
  if (omega.norm() == 0.0) throw std::invalid_argument("quasiconvexity: zero frequency vector");
  QuasiconvexityResult out;
  out.threshold = kPdTol * h.max_abs();
  if (h.dimension() == 1) {
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    out.quasiconvex = true;
    return out;
  }
  Eigen::MatrixXd b = orthocomplement_basis(omega);
  Eigen::MatrixXd restricted = b.transpose() * h.matrix() * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restricted, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues().minCoeff();
  out.quasiconvex = out.min_eigenvalue > out.threshold;
  return out;
}

}  // namespace quasilab
