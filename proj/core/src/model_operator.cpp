#include "quasilab/model_operator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace quasilab {

namespace {

double quadratic(const Eigen::MatrixXd& h, const Multiindex& alpha) {
  double sum = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t j = 0; j < alpha.size(); ++j)
      sum += h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * static_cast<double>(alpha[i]) *
             static_cast<double>(alpha[j]);
  }
  return sum;
}

}  // namespace

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
  return out;
}

double RemainderModel::multiplier(const Multiindex& alpha) const {
  double sq = 0.0;
  for (auto a : alpha) sq += static_cast<double>(a) * static_cast<double>(a);
  return multiplier_scale / (1.0 + sq);
}

void ModelOperatorSpec::validate() const {
  const std::size_t n = omega.dimension();
  if (n == 0) throw std::invalid_argument("model operator: empty frequency vector");
  if (static_cast<std::size_t>(hessian.dimension()) != n)
    throw std::invalid_argument("model operator: hessian dimension differs from omega");
  if (omega.basis_dimension() != basis.dimension() || c.basis_dimension() != basis.dimension())
    throw std::invalid_argument("model operator: irrationality basis dimension mismatch");
  if (r.dimension() != n) throw std::invalid_argument("model operator: r dimension differs from omega");
  if (!r.is_real()) throw std::invalid_argument("model operator: r is not real-valued");
  if (remainder) {
    if (!remainder->potential.empty() && remainder->potential.dimension() != n)
      throw std::invalid_argument("model operator: remainder potential dimension mismatch");
    if (!remainder->potential.is_real())
      throw std::invalid_argument("model operator: remainder potential is not real-valued");
  }
}

TrigPolynomial apply_model_operator(const ModelOperatorSpec& spec, const TrigPolynomial& u, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("apply_model_operator: h must be positive");
  if (u.dimension() != spec.dimension()) throw std::invalid_argument("apply_model_operator: dimension mismatch");
  const double h2 = h * h;
  const double h3 = h2 * h;
  TrigPolynomial out(u.dimension());
  for (const auto& [alpha, coeff] : u) {
    BasisNumber transport = spec.omega.dot(alpha) + spec.c;
    double first = transport.is_zero() ? 0.0 : transport.to_double(spec.basis);
    double diag = h * first + h2 * quadratic(spec.hessian.matrix(), alpha);
    if (spec.remainder) diag += h3 * spec.remainder->multiplier(alpha);
    out.add(alpha, diag * coeff);
  }
  if (!spec.r.empty()) out += convolve(spec.r, u) * Complex(h2);
  if (spec.remainder && !spec.remainder->potential.empty())
    out += convolve(spec.remainder->potential, u) * Complex(h3);
  return out;
}

bool TransformedQuadraticForm::omega_block_positive_definite() const {
  if (omega_block.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(omega_block, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() > 0.0;
}

TransformedQuadraticForm transform_quadratic_form(const HessianForm& h, const UnimodularSplitting& split) {
  const auto n = static_cast<Eigen::Index>(split.dimension());
  if (h.dimension() != n) throw std::invalid_argument("transform_quadratic_form: dimension mismatch");
  const auto k = static_cast<Eigen::Index>(split.k);
  const Eigen::MatrixXd m = to_eigen(split.M);
  const Eigen::MatrixXd m_inv = to_eigen(split.M_inverse);

  TransformedQuadraticForm form;
  // Covectors transform contragrediently: eta = M^T xi, so xi^T H xi = eta^T (M^{-1} H M^{-T}) eta.
  form.full = m_inv * h.matrix() * m_inv.transpose();
  form.full = 0.5 * (form.full + form.full.transpose());
  form.rho1 = form.full.topLeftCorner(k, k);
  form.rho2 = 2.0 * form.full.topRightCorner(k, n - k);
  form.omega_block = form.full.bottomRightCorner(n - k, n - k);

  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd xi(n);
    for (Eigen::Index i = 0; i < n; ++i) xi(i) = normal(rng);
    const Eigen::VectorXd eta = m.transpose() * xi;
    const double original = xi.dot(h.matrix() * xi);
    const double transformed = eta.dot(form.full * eta);
    const double scale = std::max({std::abs(original), h.max_abs() * xi.squaredNorm(), 1e-300});
    const double err = std::abs(original - transformed) / scale;
    form.max_invariance_error = std::max(form.max_invariance_error, err);
  }
  if (form.max_invariance_error > 1e-10)
    throw std::runtime_error("transform_quadratic_form: transformed form disagrees with original");
  return form;
}

double OperatorOnTPrime::symbol(const Multiindex& beta) const {
  const auto d = static_cast<Eigen::Index>(beta.size());
  if (d != omega_block.rows()) throw std::invalid_argument("symbol: dimension mismatch");
  double s = rho;
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto bi = static_cast<double>(beta[static_cast<std::size_t>(i)]);
    s += gamma(i) * bi;
    for (Eigen::Index j = 0; j < d; ++j) s += omega_block(i, j) * bi * static_cast<double>(beta[static_cast<std::size_t>(j)]);
  }
  return s;
}

TrigPolynomial OperatorOnTPrime::apply(const TrigPolynomial& w) const {
  if (w.dimension() != dimension()) throw std::invalid_argument("Q_alpha apply: dimension mismatch");
  TrigPolynomial out(w.dimension());
  for (const auto& [beta, c] : w) out.add(beta, symbol(beta) * c);
  if (!zero_mode_multiplier.empty()) out += convolve(zero_mode_multiplier, w);
  return out;
}

OperatorOnTPrime assemble_Q_alpha(const TransformedQuadraticForm& form, const Multiindex& alpha,
                                  const TrigPolynomial& r0_hat) {
  if (alpha.size() != form.k()) throw std::invalid_argument("assemble_Q_alpha: alpha must have dimension k");
  if (r0_hat.dimension() != form.complement_dimension())
    throw std::invalid_argument("assemble_Q_alpha: r0 must live on T'");
  Eigen::VectorXd a(static_cast<Eigen::Index>(alpha.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i) a(static_cast<Eigen::Index>(i)) = static_cast<double>(alpha[i]);
  OperatorOnTPrime op;
  op.omega_block = form.omega_block;
  op.gamma = form.rho2.transpose() * a;
  if (op.gamma.size() == 0) op.gamma = Eigen::VectorXd::Zero(form.omega_block.rows());
  op.rho = a.size() == 0 ? 0.0 : a.dot(form.rho1 * a);
  op.zero_mode_multiplier = r0_hat;
  return op;
}

}  // namespace quasilab
