#pragma once

#include "quasilab/decay_fit.hpp"
#include "quasilab/lattice.hpp"
#include "quasilab/model_operator.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace quasilab {

/// u(x; h) sampled on a decreasing h-ladder; members[i] belongs to h_ladder[i].
struct QuasimodeFamily {
  std::vector<double> h_ladder;
  std::vector<TrigPolynomial> members;
  std::vector<double> norms;  ///< L2 norm of each member

  std::size_t size() const { return h_ladder.size(); }
  std::size_t dimension() const { return members.empty() ? 0 : members.front().dimension(); }
  /// Checks ladder/members agree and each norm is within 1e-8 of 1.
  void validate() const;
};

/// Builds a family with members[i] = member for each h, normalized to unit L2 norm.
QuasimodeFamily constant_family(const TrigPolynomial& member, const std::vector<double>& h_ladder);

/// Operator data that the factory completes: it derives r and, if absent, c.
struct FactoryTemplate {
  FrequencyVector omega;
  IrrationalityBasis basis;
  HessianForm hessian{Eigen::MatrixXd::Identity(1, 1)};
  std::optional<BasisNumber> c;  ///< back-solved as -omega_tilde . alpha0 when empty
  std::optional<RemainderModel> remainder;
};

struct FactoryQuasimode {
  ModelOperatorSpec spec;
  QuasimodeFamily family;
  TrigPolynomial r0_hat{1};  ///< multiplier on T' with (Q_alpha0 + r0) v = 0
  TrigPolynomial v{1};       ///< the profile on T', as supplied
  double min_abs_v = 0.0;    ///< over the 4N grid
};

inline constexpr double kReexpansionCutoff = 1e-14;
inline constexpr double kNonvanishingMargin = 1e-3;

/// Inverse construction of a resonant quasimode u = e_alpha0(y) v(z):
/// r0 = -(Q_alpha0 v) / v by grid division on 4N points per axis and
/// re-expansion (coefficients below 1e-14 dropped); r(x) = r0(z); c = -omega_tilde . alpha0.
/// Throws std::invalid_argument if v is not real, vanishes (min |v| < 1e-3 max |v|),
/// alpha0 is not resonant for a supplied c, or r0 comes out non-real.
FactoryQuasimode build_factory_quasimode(const FactoryTemplate& tmpl, const UnimodularSplitting& split,
                                         const Multiindex& alpha0, const TrigPolynomial& v,
                                         const std::vector<double>& h_ladder, int truncation = 16);

/// u = sum_alpha e_alpha(y) u_alpha(z): modes keyed by the T-frequency alpha.
struct ModeDecomposition {
  std::map<Multiindex, TrigPolynomial> modes;
  std::size_t k = 0;
  std::size_t complement_dimension = 0;

  double total_mass() const;
  TrigPolynomial reassemble(const UnimodularSplitting& split) const;
};

ModeDecomposition decompose_along_T(const TrigPolynomial& u, const UnimodularSplitting& split);

/// Lifts a function on T' to the x torus as a y-independent function.
TrigPolynomial lift_from_complement(const TrigPolynomial& w, const UnimodularSplitting& split,
                                    const Multiindex& alpha = {});

struct QuasimodeOrderReport {
  std::vector<double> residual_norms;  ///< ||P u(.; h)||
  DecayFit fit;
  double delta = 0.0;
  bool exact_kernel = false;  ///< every residual < 1e-13
  bool passed = false;
};

/// Passes iff the fitted exponent of ||Pu|| is >= 2 + delta - 0.1, or all residuals < 1e-13.
QuasimodeOrderReport verify_quasimode_order(const QuasimodeFamily& family, const ModelOperatorSpec& spec,
                                            double delta);

struct ModeConcentrationReport {
  std::map<Multiindex, DecayFit> leakage;  ///< alpha != alpha0
  std::vector<double> alpha0_mass;         ///< ||u_alpha0(.; h)|| per ladder point
  double epsilon = 0.0;
  bool leakage_decays = true;
  bool alpha0_bounded_below = true;  ///< >= 1/2 on the smaller half of the ladder
  bool passed = true;
};

/// Every non-resonant mode must decay with exponent >= 1 - epsilon - 0.1.
ModeConcentrationReport check_mode_concentration(const QuasimodeFamily& family, const UnimodularSplitting& split,
                                                 const Multiindex& alpha0, double epsilon);

inline constexpr double kExponentTolerance = 0.1;

}  // namespace quasilab
