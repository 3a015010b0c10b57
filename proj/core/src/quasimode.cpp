#include "quasilab/quasimode.hpp"

#include "quasilab/grid_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace quasilab {

void QuasimodeFamily::validate() const {
  if (h_ladder.size() != members.size() || norms.size() != members.size())
    throw std::invalid_argument("quasimode family: ladder, members and norms differ in length");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!(h_ladder[i] > 0.0)) throw std::invalid_argument("quasimode family: h must be positive");
    if (i > 0 && !(h_ladder[i] < h_ladder[i - 1]))
      throw std::invalid_argument("quasimode family: h ladder must be decreasing");
    if (std::abs(members[i].l2_norm() - 1.0) > 1e-8)
      throw std::invalid_argument("quasimode family: member is not L2-normalized");
  }
}

QuasimodeFamily constant_family(const TrigPolynomial& member, const std::vector<double>& h_ladder) {
  const double norm = member.l2_norm();
  if (!(norm > 0.0)) throw std::invalid_argument("constant_family: zero member");
  QuasimodeFamily family;
  family.h_ladder = h_ladder;
  const TrigPolynomial normalized = member * Complex(1.0 / norm);
  family.members.assign(h_ladder.size(), normalized);
  family.norms.assign(h_ladder.size(), normalized.l2_norm());
  return family;
}

TrigPolynomial lift_from_complement(const TrigPolynomial& w, const UnimodularSplitting& split,
                                    const Multiindex& alpha) {
  if (w.dimension() != split.complement_dimension())
    throw std::invalid_argument("lift_from_complement: w must live on T'");
  if (!alpha.empty() && alpha.size() != split.k) throw std::invalid_argument("lift_from_complement: alpha must have dimension k");
  TrigPolynomial out(split.dimension());
  Multiindex ab(split.dimension(), 0);
  for (std::size_t i = 0; i < alpha.size(); ++i) ab[i] = alpha[i];
  for (const auto& [beta, c] : w) {
    for (std::size_t i = 0; i < beta.size(); ++i) ab[split.k + i] = beta[i];
    out.add(split.from_split(ab), c);
  }
  return out;
}

FactoryQuasimode build_factory_quasimode(const FactoryTemplate& tmpl, const UnimodularSplitting& split,
                                         const Multiindex& alpha0, const TrigPolynomial& v,
                                         const std::vector<double>& h_ladder, int truncation) {
  const std::size_t d = split.complement_dimension();
  if (tmpl.omega.dimension() != split.dimension()) throw std::invalid_argument("factory: omega does not match the splitting");
  if (alpha0.size() != split.k) throw std::invalid_argument("factory: alpha0 must have dimension k");
  if (v.dimension() != d) throw std::invalid_argument("factory: v must live on T' (dimension n - k)");
  if (v.empty()) throw std::invalid_argument("factory: v vanishes identically");
  if (!v.is_real()) throw std::invalid_argument("factory: v is not real-valued");
  if (truncation < 1) throw std::invalid_argument("factory: truncation must be positive");

  BasisNumber transport = BasisNumber::zero(tmpl.basis.dimension());
  for (std::size_t j = 0; j < split.k; ++j)
    if (alpha0[j] != 0) transport += split.omega_tilde[j] * Rational(alpha0[j]);
  BasisNumber c = tmpl.c ? *tmpl.c : -transport;
  if (!(transport + c).is_zero()) throw std::invalid_argument("factory: alpha0 is not resonant for the supplied c");

  const TransformedQuadraticForm form = transform_quadratic_form(tmpl.hessian, split);
  const OperatorOnTPrime q_alpha0 = assemble_Q_alpha(form, alpha0, TrigPolynomial(d));
  const TrigPolynomial qv = q_alpha0.apply(v);

  const auto points = static_cast<std::size_t>(4 * truncation);
  if (2 * v.support_radius() >= static_cast<std::int64_t>(points))
    throw std::invalid_argument("factory: v is not resolved by the 4N grid");
  const GridValues v_grid = evaluate_on_grid(v, points);
  const GridValues qv_grid = evaluate_on_grid(qv, points);

  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (const auto& value : v_grid.values) {
    min_abs = std::min(min_abs, std::abs(value));
    max_abs = std::max(max_abs, std::abs(value));
  }
  if (!(min_abs >= kNonvanishingMargin * max_abs) || max_abs == 0.0)
    throw std::invalid_argument("factory: v vanishes or nearly vanishes on the grid");

  GridValues r_grid = v_grid;
  double max_re = 0.0, max_im = 0.0;
  for (std::size_t i = 0; i < r_grid.values.size(); ++i) {
    const Complex ratio = -qv_grid.values[i] / v_grid.values[i];
    max_re = std::max(max_re, std::abs(ratio.real()));
    max_im = std::max(max_im, std::abs(ratio.imag()));
    r_grid.values[i] = Complex(ratio.real(), 0.0);
  }
  if (max_im > 1e-9 * std::max(max_re, 1.0))
    throw std::invalid_argument("factory: derived r0 is not real (gamma(alpha0) . D v does not vanish)");

  TrigPolynomial r0_raw = coefficients_from_grid(r_grid);
  TrigPolynomial r0_trimmed(d);
  const auto nyquist = static_cast<std::int64_t>(points / 2);
  for (const auto& [beta, coeff] : r0_raw) {
    bool on_nyquist = false;
    for (auto b : beta) on_nyquist = on_nyquist || b == -nyquist;
    if (!on_nyquist) r0_trimmed.set(beta, coeff);
  }
  const TrigPolynomial r0 = r0_trimmed.real_part().truncated(kReexpansionCutoff);

  FactoryQuasimode out;
  out.spec.omega = tmpl.omega;
  out.spec.basis = tmpl.basis;
  out.spec.hessian = tmpl.hessian;
  out.spec.c = c;
  out.spec.r = lift_from_complement(r0, split);
  out.spec.remainder = tmpl.remainder;
  out.spec.validate();

  out.family = constant_family(lift_from_complement(v, split, alpha0), h_ladder);
  out.r0_hat = r0;
  out.v = v;
  out.min_abs_v = min_abs;
  return out;
}

double ModeDecomposition::total_mass() const {
  double sum = 0.0;
  for (const auto& [alpha, mode] : modes) {
    const double n = mode.l2_norm();
    sum += n * n;
  }
  return sum;
}

TrigPolynomial ModeDecomposition::reassemble(const UnimodularSplitting& split) const {
  TrigPolynomial out(split.dimension());
  Multiindex ab(split.dimension(), 0);
  for (const auto& [alpha, mode] : modes) {
    std::copy(alpha.begin(), alpha.end(), ab.begin());
    for (const auto& [beta, c] : mode) {
      std::copy(beta.begin(), beta.end(), ab.begin() + static_cast<std::ptrdiff_t>(split.k));
      out.set(split.from_split(ab), c);
    }
  }
  return out;
}

ModeDecomposition decompose_along_T(const TrigPolynomial& u, const UnimodularSplitting& split) {
  if (u.dimension() != split.dimension()) throw std::invalid_argument("decompose_along_T: dimension mismatch");
  ModeDecomposition out;
  out.k = split.k;
  out.complement_dimension = split.complement_dimension();
  for (const auto& [xi, c] : u) {
    const Multiindex ab = split.to_split(xi);
    Multiindex alpha(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(split.k));
    Multiindex beta(ab.begin() + static_cast<std::ptrdiff_t>(split.k), ab.end());
    auto [it, inserted] = out.modes.try_emplace(std::move(alpha), out.complement_dimension);
    it->second.set(beta, c);
  }
  return out;
}

QuasimodeOrderReport verify_quasimode_order(const QuasimodeFamily& family, const ModelOperatorSpec& spec,
                                            double delta) {
  if (family.dimension() != spec.dimension())
    throw std::invalid_argument("verify_quasimode_order: family and operator dimensions differ");
  QuasimodeOrderReport report;
  report.delta = delta;
  for (std::size_t i = 0; i < family.size(); ++i)
    report.residual_norms.push_back(apply_model_operator(spec, family.members[i], family.h_ladder[i]).l2_norm());
  report.fit = fit_decay_exponent(family.h_ladder, report.residual_norms);
  report.exact_kernel = std::all_of(report.residual_norms.begin(), report.residual_norms.end(),
                                    [](double r) { return r < 1e-13; });
  report.passed = report.exact_kernel || report.fit.exponent >= 2.0 + delta - kExponentTolerance;
  return report;
}

ModeConcentrationReport check_mode_concentration(const QuasimodeFamily& family, const UnimodularSplitting& split,
                                                 const Multiindex& alpha0, double epsilon) {
  if (alpha0.size() != split.k) throw std::invalid_argument("check_mode_concentration: alpha0 must have dimension k");
  ModeConcentrationReport report;
  report.epsilon = epsilon;

  std::vector<ModeDecomposition> decompositions;
  std::set<Multiindex> keys;
  for (const auto& member : family.members) {
    decompositions.push_back(decompose_along_T(member, split));
    for (const auto& [alpha, mode] : decompositions.back().modes) keys.insert(alpha);
  }
  for (const auto& dec : decompositions) {
    auto it = dec.modes.find(alpha0);
    report.alpha0_mass.push_back(it == dec.modes.end() ? 0.0 : it->second.l2_norm());
  }
  for (const auto& alpha : keys) {
    if (alpha == alpha0) continue;
    std::vector<double> norms;
    for (const auto& dec : decompositions) {
      auto it = dec.modes.find(alpha);
      norms.push_back(it == dec.modes.end() ? 0.0 : it->second.l2_norm());
    }
    DecayFit fit = fit_decay_exponent(family.h_ladder, norms);
    if (fit.exponent < 1.0 - epsilon - kExponentTolerance) report.leakage_decays = false;
    report.leakage.emplace(alpha, std::move(fit));
  }
  for (std::size_t i = family.size() / 2; i < family.size(); ++i)
    if (report.alpha0_mass[i] < 0.5) report.alpha0_bounded_below = false;
  report.passed = report.leakage_decays && report.alpha0_bounded_below;
  return report;
}

}  // namespace quasilab
