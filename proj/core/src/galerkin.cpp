#include "quasilab/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace quasilab {

namespace {

std::vector<Multiindex> window_modes(std::size_t dim, int n) {
  std::vector<Multiindex> modes;
  Multiindex beta(dim, -n);
  while (true) {
    modes.push_back(beta);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (beta[i] < n) {
        ++beta[i];
        break;
      }
      beta[i] = -n;
      if (i == 0) return modes;
    }
    if (dim == 0) return modes;
  }
}

// Flat index of beta in window_modes order, or -1 outside the window.
long window_index(const Multiindex& beta, int n) {
  long idx = 0;
  const long width = 2L * n + 1;
  for (auto b : beta) {
    if (b < -n || b > n) return -1;
    idx = idx * width + (b + n);
  }
  return idx;
}

void gauge_phase(Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // strict comparison with a relative margin keeps the choice stable under rounding
    if (std::abs(v(i)) > best_abs * (1.0 + 1e-9)) {
      best_abs = std::abs(v(i));
      best = i;
    }
  }
  if (best_abs > 0.0) v *= std::conj(v(best)) / best_abs;
}

Complex box_character_integral(std::int64_t m, double a, double b) {
  if (m == 0) return Complex(b - a);
  const double w = 2.0 * std::numbers::pi * static_cast<double>(m);
  return (std::polar(1.0, w * b) - std::polar(1.0, w * a)) / Complex(0.0, w);
}

}  // namespace

GalerkinProblem::GalerkinProblem(const OperatorOnTPrime& op, int truncation) : truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("Galerkin truncation must be positive");
  const std::size_t d = op.dimension();
  if (op.zero_mode_multiplier.dimension() != d)
    throw std::invalid_argument("Galerkin: zero-mode multiplier dimension mismatch");
  modes_ = window_modes(d, truncation);
  const auto size = static_cast<Eigen::Index>(modes_.size());
  matrix_ = Eigen::MatrixXcd::Zero(size, size);

  double max_symbol = 0.0;
  for (Eigen::Index j = 0; j < size; ++j) {
    const double s = op.symbol(modes_[static_cast<std::size_t>(j)]);
    matrix_(j, j) += s;
    max_symbol = std::max(max_symbol, std::abs(s));
  }
  double r_l1 = 0.0;
  for (const auto& [gamma, c] : op.zero_mode_multiplier) {
    r_l1 += std::abs(c);
    for (Eigen::Index j = 0; j < size; ++j) {
      const long i = window_index(modes_[static_cast<std::size_t>(j)] + gamma, truncation);
      if (i >= 0) matrix_(i, j) += c;
    }
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  scale_ = std::max(max_symbol + r_l1, 1e-300);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(matrix_);
  if (eig.info() != Eigen::Success) throw std::runtime_error("Galerkin eigensolver did not converge");
  eigenvalues_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
}

Eigen::VectorXcd GalerkinProblem::to_vector(const TrigPolynomial& w) const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(modes_.size()));
  for (const auto& [beta, c] : w) {
    const long i = window_index(beta, truncation_);
    if (i < 0) throw std::invalid_argument("polynomial is not supported within the Galerkin window");
    v(i) = c;
  }
  return v;
}

TrigPolynomial GalerkinProblem::to_polynomial(const Eigen::VectorXcd& v) const {
  TrigPolynomial p(modes_.empty() ? 0 : modes_.front().size());
  for (Eigen::Index i = 0; i < v.size(); ++i) p.set(modes_[static_cast<std::size_t>(i)], v(i));
  return p;
}

GalerkinNullspace galerkin_nullspace(const OperatorOnTPrime& op, int truncation, double null_tol) {
  if (truncation < 4) throw std::invalid_argument("galerkin_nullspace: truncation N must be >= 4");
  if (!(null_tol > 0.0)) throw std::invalid_argument("galerkin_nullspace: null_tol must be positive");
  if (op.dimension() > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(op.omega_block, Eigen::EigenvaluesOnly);
    if (!(eig.eigenvalues().minCoeff() > 0.0))
      throw std::invalid_argument("galerkin_nullspace: Omega block is not positive definite (non-elliptic)");
  }

  GalerkinProblem problem(op, truncation);

  double tail = 0.0;
  for (const auto& [gamma, c] : op.zero_mode_multiplier) {
    std::int64_t radius = 0;
    for (auto g : gamma) radius = std::max<std::int64_t>(radius, g < 0 ? -g : g);
    if (radius > 2L * truncation - 2) tail += std::abs(c);
  }
  if (tail > null_tol * problem.scale())
    throw std::invalid_argument("galerkin_nullspace: truncation N too small to contain the support of r0");

  GalerkinNullspace out;
  out.truncation = truncation;
  out.null_tol = null_tol;
  out.scale = problem.scale();

  const Eigen::VectorXd& lambda = problem.eigenvalues();
  std::vector<double> moduli;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double scaled = lambda(i) / problem.scale();
    moduli.push_back(std::abs(scaled));
    if (std::abs(scaled) < null_tol) {
      Eigen::VectorXcd v = problem.eigenvectors().col(i);
      gauge_phase(v);
      out.basis.push_back(problem.to_polynomial(v));
      out.eigenvalues.push_back(scaled);
    }
  }
  std::sort(moduli.begin(), moduli.end());
  moduli.resize(std::min<std::size_t>(moduli.size(), 8));
  out.near_zero_spectrum = std::move(moduli);
  return out;
}

RangeSolution solve_on_range(const OperatorOnTPrime& op, const GalerkinNullspace& null, const TrigPolynomial& g) {
  if (g.dimension() != op.dimension()) throw std::invalid_argument("solve_on_range: dimension mismatch");
  GalerkinProblem problem(op, null.truncation);
  const Eigen::VectorXcd rhs = problem.to_vector(g);
  const Eigen::VectorXd& lambda = problem.eigenvalues();
  const Eigen::MatrixXcd& vecs = problem.eigenvectors();

  RangeSolution out;
  out.smallest_retained = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(rhs.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double scaled = std::abs(lambda(i)) / problem.scale();
    if (scaled < null.null_tol) continue;
    out.smallest_retained = std::min(out.smallest_retained, scaled);
    const Complex coeff = vecs.col(i).dot(rhs) / lambda(i);  // dot conjugates the first argument
    w += coeff * vecs.col(i);
  }
  out.ill_conditioned = out.smallest_retained < 1e3 * null.null_tol;
  out.w = problem.to_polynomial(w);
  return out;
}

double Box::volume() const {
  if (lower.size() != upper.size()) throw std::invalid_argument("box bounds differ in dimension");
  double v = 1.0;
  for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
  return v;
}

UniqueContinuationResult unique_continuation_constant(const GalerkinNullspace& null, const Box& box) {
  if (null.basis.empty()) throw std::invalid_argument("unique_continuation_constant: empty nullspace");
  const std::size_t d = null.basis.front().dimension();
  if (box.lower.size() != d || box.upper.size() != d)
    throw std::invalid_argument("unique_continuation_constant: box dimension mismatch");
  for (std::size_t i = 0; i < d; ++i) {
    if (!(box.upper[i] > box.lower[i]) || box.upper[i] - box.lower[i] > 1.0)
      throw std::invalid_argument("unique_continuation_constant: box must have positive volume within one period");
  }

  // Per-axis integrals of e_m over [lower, upper], cached by frequency difference.
  std::int64_t radius = 0;
  for (const auto& f : null.basis) radius = std::max(radius, f.support_radius());
  const std::int64_t width = 2 * radius + 1;
  std::vector<std::vector<Complex>> axis(d, std::vector<Complex>(static_cast<std::size_t>(2 * width - 1)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::int64_t m = -2 * radius; m <= 2 * radius; ++m)
      axis[i][static_cast<std::size_t>(m + 2 * radius)] = box_character_integral(m, box.lower[i], box.upper[i]);

  const auto count = static_cast<Eigen::Index>(null.basis.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(count, count);
  for (Eigen::Index a = 0; a < count; ++a) {
    for (Eigen::Index b = a; b < count; ++b) {
      Complex sum{};
      for (const auto& [beta, fa] : null.basis[static_cast<std::size_t>(a)]) {
        for (const auto& [beta2, fb] : null.basis[static_cast<std::size_t>(b)]) {
          Complex w = 1.0;
          for (std::size_t i = 0; i < d; ++i)
            w *= axis[i][static_cast<std::size_t>(beta[i] - beta2[i] + 2 * radius)];
          sum += fa * std::conj(fb) * w;
        }
      }
      gram(a, b) = sum;
      gram(b, a) = std::conj(sum);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
  UniqueContinuationResult out;
  out.constant = eig.eigenvalues()(0);
  Eigen::VectorXcd combo = eig.eigenvectors().col(0);
  gauge_phase(combo);
  out.minimizer = TrigPolynomial(d);
  for (Eigen::Index a = 0; a < count; ++a) out.minimizer += null.basis[static_cast<std::size_t>(a)] * combo(a);
  return out;
}

}  // namespace quasilab
