#include "quasilab/pipeline.hpp"

#include "quasilab/family_io.hpp"
#include "quasilab/galerkin.hpp"
#include "quasilab/lattice.hpp"
#include "quasilab/maslov.hpp"
#include "quasilab/nondegeneracy.hpp"
#include "quasilab/quasimode.hpp"
#include "quasilab/wavefront.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace quasilab {

namespace {

struct Context {
  const LabConfig& cfg;
  const RunOptions& options;
  LabResults& res;
  std::vector<double> ladder;
  std::optional<UnimodularSplitting> split;
  std::optional<Multiindex> alpha0;
  std::optional<BasisNumber> c;
  std::optional<FactoryQuasimode> factory;
  std::optional<TrigPolynomial> r0_hat;  ///< the y-independent part of r, on T'
};

std::string multiindex_label(const Multiindex& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) s += (i ? " " : "") + std::to_string(alpha[i]);
  return s + ")";
}

Json lattice_json(const IntegerLattice& lattice) {
  return Json{{"rank", lattice.rank()}, {"basis_columns", to_json(lattice.basis().transposed())}};
}

Eigen::VectorXd omega_doubles(const LabConfig& cfg) {
  const auto values = cfg.omega.to_doubles(cfg.basis);
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

// Runs one stage, recording an exception as an aborted stage. Returns false if it threw.
template <class F>
bool stage(Context& ctx, const char* name, F&& body) {
  try {
    body();
    return true;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    ctx.res.aborted.push_back(std::string(name) + ": " + e.what());
    return false;
  }
}

void hypotheses(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const Eigen::VectorXd omega = omega_doubles(cfg);
  const BorderedDeterminant bd = bordered_determinant(cfg.hessian, omega);
  const QuasiconvexityResult qc = quasiconvexity(cfg.hessian, omega);
  Json h;
  h["A"] = Json{{"name", "real principal symbol"},
                {"status", "holds by construction"},
                {"detail", "p(xi) = omega.xi + xi^T H xi with real omega and real symmetric H"}};
  h["B"] = Json{{"name", "real constant subprincipal symbol"},
                {"status", "holds by construction"},
                {"detail", "c is a real constant; r enters at order h^2 and is validated real"}};
  h["C"] = Json{{"name", "complete integrability"},
                {"status", "holds by construction"},
                {"detail", "p depends on xi only, so x, xi are action-angle coordinates"}};
  h["D"] = Json{{"name", "isoenergetic nondegeneracy"},
                {"bordered_determinant", bd.det},
                {"singular_ratio", bd.singular_ratio},
                {"singular_ratio_threshold", 1e-9},
                {"power_bound", bd.power_bound},
                {"nondegenerate", bd.nondegenerate},
                {"required", cfg.require_nondegenerate}};
  h["F"] = Json{{"name", "Nekhoroshev quasiconvexity"},
                {"min_eigenvalue_on_orthocomplement", qc.min_eigenvalue},
                {"threshold", qc.threshold},
                {"quasiconvex", qc.quasiconvex},
                {"required", cfg.require_quasiconvex}};
  ctx.res.sections["hypotheses"] = h;
  if (cfg.require_nondegenerate)
    ctx.res.check("isoenergetic nondegeneracy", "D", bd.nondegenerate,
                  bd.nondegenerate ? "bordered matrix is nonsingular" : "bordered matrix is singular");
  if (cfg.require_quasiconvex)
    ctx.res.check("quasiconvexity", "F", qc.quasiconvex,
                  qc.quasiconvex ? "H is positive definite on the orthocomplement of omega"
                                 : "H is not positive definite on the orthocomplement of omega");
}

void maslov(Context& ctx) {
  if (!ctx.cfg.maslov) return;
  const auto& m = *ctx.cfg.maslov;
  const bool ok = maslov_admissible(m.liouville_over_2pi, m.maslov, m.h);
  ctx.res.sections["maslov"] = Json{{"admissible", ok}, {"h", to_json(m.h)}};
  ctx.res.check("Maslov congruence", "", ok,
                ok ? "lambda/(2 pi h) - maslov/4 is integral on every cycle"
                   : "lambda/(2 pi h) - maslov/4 is not integral on some cycle");
}

void splitting(Context& ctx) {
  const auto& cfg = ctx.cfg;
  ctx.split = split_frequencies(cfg.omega);
  const auto& s = *ctx.split;

  const std::vector<BasisNumber> transformed = multiply(s.M_inverse, cfg.omega.entries());
  bool trailing_zero = true;
  for (std::size_t i = s.k; i < transformed.size(); ++i) trailing_zero = trailing_zero && transformed[i].is_zero();
  const Integer det = s.M.determinant();
  const bool unimodular = det == 1 || det == -1;
  const bool reduced_free = relation_lattice(s.omega_tilde).rank() == 0;

  Json omega_tilde = Json::array();
  for (const auto& w : s.omega_tilde) omega_tilde.push_back(to_json(w));
  ctx.res.sections["splitting"] = Json{{"k", s.k},
                                       {"complement_dimension", s.complement_dimension()},
                                       {"M", to_json(s.M)},
                                       {"M_inverse", to_json(s.M_inverse)},
                                       {"omega_tilde", omega_tilde},
                                       {"relations", lattice_json(s.relations)},
                                       {"closure", lattice_json(s.closure)},
                                       {"unimodular", unimodular},
                                       {"trailing_coordinates_zero", trailing_zero},
                                       {"reduced_frequencies_relation_free", reduced_free}};
  ctx.res.check("splitting invariants", "", unimodular && trailing_zero && reduced_free,
                "|det M| = 1, trailing coordinates of M^-1 omega vanish, reduced frequencies are relation-free");

  // Resonant mode: from c when given, otherwise from the factory block.
  Json resonant;
  if (cfg.c) {
    ctx.c = cfg.c;
    ctx.alpha0 = find_resonant_mode(s.omega_tilde, *cfg.c);
    resonant["source"] = "c";
    if (cfg.factory && ctx.alpha0 != cfg.factory->alpha0) {
      ctx.res.check("factory mode is resonant", "", false,
                    "factory alpha0 " + multiindex_label(cfg.factory->alpha0) + " does not solve omega_tilde.alpha + c = 0");
    }
  } else if (cfg.factory) {
    ctx.alpha0 = cfg.factory->alpha0;
    BasisNumber transport = BasisNumber::zero(cfg.basis.dimension());
    for (std::size_t j = 0; j < s.k; ++j) transport += s.omega_tilde[j] * Rational((*ctx.alpha0)[j]);
    ctx.c = -transport;
    resonant["source"] = "factory";
  } else {
    resonant["source"] = "none";
  }
  resonant["alpha0"] = ctx.alpha0 ? to_json(*ctx.alpha0) : Json(nullptr);
  resonant["c"] = ctx.c ? to_json(*ctx.c) : Json("resonant");
  resonant["unique"] = true;  // relation-free omega_tilde admits at most one solution
  ctx.res.sections["resonant_mode"] = resonant;
}

void build(Context& ctx) {
  const auto& cfg = ctx.cfg;
  FactoryTemplate tmpl;
  tmpl.omega = cfg.omega;
  tmpl.basis = cfg.basis;
  tmpl.hessian = cfg.hessian;
  tmpl.c = cfg.c;
  if (cfg.remainder.enabled) tmpl.remainder = RemainderModel{cfg.remainder.multiplier_scale, cfg.remainder.potential};
  ctx.factory = build_factory_quasimode(tmpl, *ctx.split, cfg.factory->alpha0, cfg.factory->v, ctx.ladder,
                                        cfg.truncation);
  ctx.r0_hat = ctx.factory->r0_hat;
  const auto& fq = *ctx.factory;

  write_family(ctx.options.out / "family", fq.family,
               Json{{"construction", "factory"},
                    {"alpha0", to_json(cfg.factory->alpha0)},
                    {"c", to_json(fq.spec.c)},
                    {"remainder", cfg.remainder.enabled}});

  ctx.res.sections["quasimode"] = Json{{"alpha0", to_json(cfg.factory->alpha0)},
                                       {"c", to_json(fq.spec.c)},
                                       {"r0_hat", to_json(fq.r0_hat)},
                                       {"r0_support_radius", fq.r0_hat.support_radius()},
                                       {"min_abs_v", fq.min_abs_v},
                                       {"member_norms", fq.family.norms},
                                       {"h_ladder", fq.family.h_ladder},
                                       {"family_dir", "family"}};
  bool normalized = true;
  try {
    fq.family.validate();
  } catch (const std::exception&) {
    normalized = false;
  }
  ctx.res.check("quasimode normalization", "E", normalized, "every member has unit L2 norm");
}

// The y-independent part of r, when r is supplied directly.
void reduce_r(Context& ctx) {
  if (!ctx.cfg.r) return;
  const ModeDecomposition dec = decompose_along_T(*ctx.cfg.r, *ctx.split);
  const Multiindex zero(ctx.split->k, 0);
  bool y_independent = true;
  for (const auto& [alpha, mode] : dec.modes) y_independent = y_independent && alpha == zero;
  Json note{{"y_independent", y_independent}};
  if (y_independent) {
    auto it = dec.modes.find(zero);
    ctx.r0_hat = it == dec.modes.end() ? TrigPolynomial(ctx.split->complement_dimension()) : it->second;
  } else {
    note["detail"] = "r varies along the orbit closure; the reduction to T' does not apply";
  }
  ctx.res.sections["r_reduction"] = note;
}

void verify(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto& fq = *ctx.factory;
  const QuasimodeOrderReport order = verify_quasimode_order(fq.family, fq.spec, cfg.thresholds.delta);
  ctx.res.sections["quasimode_order"] = Json{{"residual_norms", order.residual_norms},
                                             {"fit", to_json(order.fit)},
                                             {"delta", order.delta},
                                             {"required_exponent", 2.0 + order.delta - kExponentTolerance},
                                             {"exact_kernel", order.exact_kernel},
                                             {"passed", order.passed}};
  for (std::size_t i = 0; i < ctx.ladder.size(); ++i)
    ctx.res.decay.push_back({"residual_norm", ctx.ladder[i], order.residual_norms[i]});
  std::ostringstream msg;
  msg << "||Pu|| decays with exponent " << order.fit.exponent << " (needs " << 2.0 + order.delta - kExponentTolerance
      << ")";
  ctx.res.check("quasimode order", "E", order.passed, order.exact_kernel ? "Pu vanishes to rounding" : msg.str());

  const ModeConcentrationReport conc =
      check_mode_concentration(fq.family, *ctx.split, cfg.factory->alpha0, cfg.thresholds.epsilon);
  Json leakage = Json::object();
  for (const auto& [alpha, fit] : conc.leakage) leakage[multiindex_label(alpha)] = to_json(fit);
  ctx.res.sections["mode_concentration"] = Json{{"alpha0_mass", conc.alpha0_mass},
                                                {"leakage", leakage},
                                                {"epsilon", conc.epsilon},
                                                {"leakage_decays", conc.leakage_decays},
                                                {"alpha0_bounded_below", conc.alpha0_bounded_below},
                                                {"passed", conc.passed}};
  for (std::size_t i = 0; i < ctx.ladder.size(); ++i)
    ctx.res.decay.push_back({"alpha0_mass", ctx.ladder[i], conc.alpha0_mass[i]});
  for (const auto& [alpha, fit] : conc.leakage)
    for (std::size_t i = 0; i < fit.h.size(); ++i)
      ctx.res.decay.push_back({"leakage" + multiindex_label(alpha), fit.h[i], fit.norms[i]});
  ctx.res.check("mode concentration", "", conc.passed,
                "non-resonant modes are O(h^(1-epsilon)) and the resonant mode keeps mass >= 1/2");
}

// Galerkin nullspace of L = Q_alpha0 + r0 and the unique-continuation constant.
// `gate` makes them checks (factory case, where the profile must be recovered).
void galerkin(Context& ctx, bool gate) {
  const auto& cfg = ctx.cfg;
  const std::size_t d = ctx.split->complement_dimension();
  if (d == 0) {
    ctx.res.sections["galerkin"] = Json{{"skipped", "the complementary torus is a point"}};
    return;
  }
  const TransformedQuadraticForm form = transform_quadratic_form(cfg.hessian, *ctx.split);
  const OperatorOnTPrime op = assemble_Q_alpha(form, *ctx.alpha0, *ctx.r0_hat);
  const GalerkinNullspace null = galerkin_nullspace(op, cfg.truncation, cfg.thresholds.null_tol);

  // Control: a random real multiplier of small support should leave no kernel.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  TrigPolynomial random_r0(d);
  Multiindex beta(d, -2);
  while (true) {
    Multiindex neg(beta);
    for (auto& b : neg) b = -b;
    if (beta <= neg) {
      const double value = dist(rng);
      random_r0.set(beta, value);
      random_r0.set(neg, value);
    }
    std::size_t i = d;
    while (i > 0 && beta[i - 1] == 2) beta[--i] = -2;
    if (i == 0) break;
    ++beta[i - 1];
  }
  const GalerkinNullspace control =
      galerkin_nullspace(assemble_Q_alpha(form, *ctx.alpha0, random_r0), cfg.truncation, cfg.thresholds.null_tol);

  Json section{{"truncation", null.truncation},
               {"null_tol", null.null_tol},
               {"scale", null.scale},
               {"nullspace_dimension", null.dimension()},
               {"null_eigenvalues", null.eigenvalues},
               {"near_zero_spectrum", null.near_zero_spectrum},
               {"random_control_nullspace_dimension", control.dimension()},
               {"seed", cfg.seed}};
  if (gate) {
    const TrigPolynomial v = ctx.factory->v * Complex(1.0 / ctx.factory->v.l2_norm());
    TrigPolynomial projection(d);
    for (const auto& f : null.basis) projection += f * v.inner(f);
    const double distance = (v - projection).l2_norm();
    section["profile_distance_to_nullspace"] = distance;
    ctx.res.check("galerkin nullspace contains the profile", "", null.dimension() >= 1 && distance < 1e-6,
                  "v/||v|| lies in the numerical kernel of Q_alpha0 + r0");
  }
  if (null.dimension() > 0) {
    const UniqueContinuationResult uc = unique_continuation_constant(null, cfg.unique_continuation_box);
    ctx.res.sections["unique_continuation"] = Json{{"box_lower", cfg.unique_continuation_box.lower},
                                                   {"box_upper", cfg.unique_continuation_box.upper},
                                                   {"constant", uc.constant},
                                                   {"minimizer", to_json(uc.minimizer)}};
    if (gate)
      ctx.res.check("unique continuation constant", "", uc.constant > 0.0,
                    "every unit kernel element keeps mass on the subdomain");
  }
  ctx.res.sections["galerkin"] = section;
}

void wavefront(Context& ctx) {
  const auto& cfg = ctx.cfg;
  PhaseSpaceGrid grid;
  grid.dimension = cfg.dimension;
  grid.x_points = cfg.x_points;
  grid.xi_points = cfg.xi_points;
  MassMap map = wavefront_mass_map(ctx.factory->family, grid, ctx.options.threads);
  WavefrontThresholds th{cfg.thresholds.fill_fraction, cfg.thresholds.in_exponent, cfg.thresholds.out_exponent};
  const NonconcentrationReport report = nonconcentration_report(map, th);

  const std::size_t zero = grid.zero_index();
  Json per_xi = Json::array();
  double max_in_exponent = -std::numeric_limits<double>::infinity();
  double min_off_exponent = std::numeric_limits<double>::infinity();
  for (std::size_t xi = 0; xi < grid.xi_points.size(); ++xi) {
    std::size_t in = 0, out = 0, inconclusive = 0;
    for (std::size_t x = 0; x < grid.x_count(); ++x) {
      switch (report.classes[xi][x]) {
        case NodeClass::In: ++in; break;
        case NodeClass::Out: ++out; break;
        case NodeClass::Inconclusive: ++inconclusive; break;
      }
      const double e = map.fit(xi, x).exponent;
      if (xi == zero) max_in_exponent = std::max(max_in_exponent, e);
      else min_off_exponent = std::min(min_off_exponent, e);
    }
    per_xi.push_back(Json{{"xi", grid.xi_points[xi]}, {"IN", in}, {"OUT", out}, {"INCONCLUSIVE", inconclusive}});
  }
  ctx.res.sections["wavefront"] = Json{{"x_points", grid.x_points},
                                       {"classes_by_covector", per_xi},
                                       {"in_fraction", report.in_fraction},
                                       {"fills_torus", report.fills_torus},
                                       {"lagrangian_supported", report.lagrangian_supported},
                                       {"nonempty_interior", report.nonempty_interior},
                                       {"max_exponent_on_zero_section", max_in_exponent},
                                       {"min_exponent_off_zero_section", min_off_exponent},
                                       {"subsequence_min_mass", report.min_mass_along_ladder},
                                       {"subsequence_persistent_fraction", report.persistent_fraction},
                                       {"thresholds", Json{{"fill_fraction", th.fill_fraction},
                                                           {"in_exponent", th.in_exponent},
                                                           {"out_exponent", th.out_exponent}}}};
  ctx.res.check("fills torus", "", report.fills_torus, "fraction of zero-section nodes IN is at least fill_fraction");
  ctx.res.check("lagrangian supported", "E", report.lagrangian_supported, "every node off the zero section is OUT");
  ctx.res.check("nonempty interior", "", report.nonempty_interior, "some 2^n block of zero-section nodes is IN");
  ctx.res.mass_map = std::move(map);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "check-hypotheses") return Command::CheckHypotheses;
  if (name == "split") return Command::Split;
  if (name == "build-quasimode") return Command::BuildQuasimode;
  if (name == "verify") return Command::Verify;
  if (name == "wavefront") return Command::Wavefront;
  if (name == "all") return Command::All;
  return std::nullopt;
}

const char* to_string(Command command) {
  switch (command) {
    case Command::CheckHypotheses: return "check-hypotheses";
    case Command::Split: return "split";
    case Command::BuildQuasimode: return "build-quasimode";
    case Command::Verify: return "verify";
    case Command::Wavefront: return "wavefront";
    case Command::All: return "all";
  }
  return "?";
}

LabResults run_stages(const LabConfig& config, Command command, const RunOptions& options) {
  const bool needs_factory = command == Command::BuildQuasimode || command == Command::Verify ||
                             command == Command::Wavefront;
  if (needs_factory && !config.factory)
    throw UsageError(std::string(to_string(command)) + " needs a factory block in the config");

  LabResults res;
  res.command = to_string(command);
  Context ctx{config, options, res, dyadic_ladder(config.j_min, config.j_max), {}, {}, {}, {}, {}};
  res.sections["ladder"] = Json{{"j_min", config.j_min}, {"j_max", config.j_max}, {"h", ctx.ladder}};

  if (command == Command::CheckHypotheses || command == Command::All) {
    stage(ctx, "hypotheses", [&] { hypotheses(ctx); });
    stage(ctx, "maslov", [&] { maslov(ctx); });
  }
  if (command == Command::CheckHypotheses) return res;

  if (!stage(ctx, "splitting", [&] { splitting(ctx); }) || command == Command::Split) return res;

  if (config.factory) {
    if (!stage(ctx, "build-quasimode", [&] { build(ctx); }) || command == Command::BuildQuasimode) return res;
    if (command == Command::Verify || command == Command::All) {
      stage(ctx, "verify", [&] { verify(ctx); });
      stage(ctx, "galerkin", [&] { galerkin(ctx, true); });
    }
    if (command == Command::Wavefront || command == Command::All) stage(ctx, "wavefront", [&] { wavefront(ctx); });
  } else if (command == Command::All) {
    stage(ctx, "r-reduction", [&] { reduce_r(ctx); });
    if (ctx.alpha0 && ctx.r0_hat) stage(ctx, "galerkin", [&] { galerkin(ctx, false); });
    res.sections["quasimode"] = Json{{"skipped", "no factory block; quasimode and wavefront stages need one"}};
  }
  return res;
}

int run_pipeline(const LabConfig& config, Command command, const RunOptions& options) {
  const LabResults res = run_stages(config, command, options);
  write_report(res, echo_config(config), options.out);
  return res.all_passed() ? 0 : 2;
}

}  // namespace quasilab
