// Acceptance run: one PASS/FAIL line per criterion, with the measured value,
// the tolerance and the wall time. Exit status is nonzero if any line fails.

#include "quasilab/config.hpp"
#include "quasilab/galerkin.hpp"
#include "quasilab/maslov.hpp"
#include "quasilab/nondegeneracy.hpp"
#include "quasilab/pipeline.hpp"
#include "quasilab/wavefront.hpp"

#include "factory_fixture.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace quasilab;
using namespace quasilab::testing;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = time_limit <= 0.0 || secs < time_limit;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  char timing[96];
  if (time_limit > 0.0)
    std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", secs, time_limit);
  else
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::printf("criterion %2d %s  %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", title, o.detail.c_str(), timing);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Eigen::MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = normal(rng);
  return m;
}

// Instances where H is positive definite on omega-perp by construction:
// H = A + t omega omega^T with A positive definite and t of either sign, so
// H itself is often indefinite.
Outcome quasiconvex_implies_nondegenerate() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> shift(-20.0, 5.0);
  int counterexamples = 0, recognised = 0, indefinite = 0, below_power_bound = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index n = 2 + trial % 4;
    const Eigen::VectorXd w = random_matrix(rng, n, 1);
    const Eigen::MatrixXd b = random_matrix(rng, n, n);
    Eigen::MatrixXd h = b * b.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n) + shift(rng) * w * w.transpose();
    h = 0.5 * (h + h.transpose());
    const HessianForm form(h);
    if (Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h).eigenvalues().minCoeff() < 0.0) ++indefinite;
    if (!is_quasiconvex(form, w)) continue;
    ++recognised;
    // Independent check of the bordered determinant by full-pivot LU.
    Eigen::MatrixXd bordered = Eigen::MatrixXd::Zero(n + 1, n + 1);
    bordered.topLeftCorner(n, n) = h;
    bordered.topRightCorner(n, 1) = w;
    bordered.bottomLeftCorner(1, n) = w.transpose();
    const bool lu_invertible = Eigen::FullPivLU<Eigen::MatrixXd>(bordered).isInvertible();
    const auto bd = bordered_determinant(form, w);
    if (!bd.nondegenerate || !lu_invertible) ++counterexamples;
    if (std::abs(bd.det) <= bd.power_bound) ++below_power_bound;
  }
  return {counterexamples == 0 && recognised == 500,
          fmt("%d counterexamples, %d/500 recognised quasiconvex, %d with indefinite H, %d under the max-norm power bound",
              counterexamples, recognised, indefinite, below_power_bound)};
}

struct LatticeInstance {
  FrequencyVector omega;
};

std::vector<LatticeInstance> lattice_instances() {
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> dim(1, 4), basis(1, 4);
  std::vector<LatticeInstance> out;
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(dim(rng));
    out.push_back({random_structured_omega(rng, n, static_cast<std::size_t>(basis(rng))).omega});
  }
  return out;
}

Outcome lattice_matches_enumeration(const std::vector<LatticeInstance>& instances) {
  int bad = 0;
  std::size_t relations = 0;
  for (const auto& inst : instances) {
    const auto lattice = relation_lattice(inst.omega);
    const auto found = brute_force_relations(inst.omega, 6);
    relations += found.size();
    bool ok = rational_rank(found) == lattice.rank();
    for (const auto& a : found) ok = ok && lattice.in_rational_span(a) && lattice.contains(a);
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("%d/200 disagreements, %zu enumerated relations", bad, relations)};
}

Outcome splitting_invariants(const std::vector<LatticeInstance>& instances) {
  int bad = 0;
  for (const auto& inst : instances) {
    const auto s = split_frequencies(inst.omega);
    const Integer det = s.M.determinant();
    bool ok = det == 1 || det == -1;
    const auto transformed = multiply(s.M_inverse, inst.omega.entries());
    for (std::size_t i = s.k; i < transformed.size(); ++i) ok = ok && transformed[i].is_zero();
    ok = ok && relation_lattice(s.omega_tilde).rank() == 0;
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("%d/200 failures", bad)};
}

const std::vector<double> kLadder = dyadic_ladder(4, 12);

Outcome factory_order() {
  const auto g = golden_instance(kLadder);
  double worst = 0.0;
  for (std::size_t i = 0; i < kLadder.size(); ++i) {
    const double r = apply_model_operator(g.factory.spec, g.factory.family.members[i], kLadder[i]).l2_norm();
    worst = std::max(worst, r / (kLadder[i] * kLadder[i]));
  }
  const auto with_remainder = golden_instance(kLadder, true);
  const auto report = verify_quasimode_order(with_remainder.factory.family, with_remainder.factory.spec, 0.8);
  return {worst <= 1e-10 && report.fit.exponent >= 2.9,
          fmt("max ||Pu||/h^2 = %.2e (tol 1e-10), remainder exponent %.3f (tol >= 2.9)", worst, report.fit.exponent)};
}

QuasimodeFamily two_mode(const UnimodularSplitting& split, bool decaying) {
  const auto main = lift_from_complement(golden_profile(), split, {0});
  TrigPolynomial w(1);
  w.set({2}, 1.0);
  const auto side = lift_from_complement(w, split, {1});
  QuasimodeFamily f;
  f.h_ladder = kLadder;
  for (double h : kLadder) {
    auto u = main + side * Complex(decaying ? h : 1.0);
    u *= Complex(1.0 / u.l2_norm());
    f.members.push_back(u);
    f.norms.push_back(1.0);
  }
  return f;
}

Outcome mode_concentration() {
  const auto split = split_frequencies(rational_frequencies({2, 3}));
  const auto good = check_mode_concentration(two_mode(split, true), split, {0}, 0.05);
  const auto bad = check_mode_concentration(two_mode(split, false), split, {0}, 0.05);
  const double e = good.leakage.empty() ? 0.0 : good.leakage.begin()->second.exponent;
  return {e >= 0.9 && e <= 1.1 && good.passed && !bad.passed,
          fmt("two-mode exponent %.4f (tol [0.9, 1.1]), order-1 leakage %s", e, bad.passed ? "passed" : "fails")};
}

OperatorOnTPrime golden_operator() {
  const auto g = golden_instance(dyadic_ladder(4, 7));
  return assemble_Q_alpha(transform_quadratic_form(g.factory.spec.hessian, g.split), {0}, g.factory.r0_hat);
}

Outcome galerkin() {
  const auto null = galerkin_nullspace(golden_operator(), 16);
  double distance = std::numeric_limits<double>::infinity();
  if (null.dimension() == 1) {
    const auto v = golden_profile() * Complex(1.0 / golden_profile().l2_norm());
    const Complex ip = null.basis[0].inner(v);
    distance = (null.basis[0] - v * (ip / std::abs(ip))).l2_norm();
  }
  std::mt19937_64 rng(3003);
  std::size_t random_kernel = 0;
  for (int t = 0; t < 10; ++t) {
    auto r = random_polynomial(rng, 1, 3, 4, true);
    r *= Complex(1.0 / r.l2_norm());
    OperatorOnTPrime op;
    op.omega_block = Eigen::MatrixXd::Identity(1, 1);
    op.gamma = Eigen::VectorXd::Zero(1);
    op.zero_mode_multiplier = r;
    random_kernel += galerkin_nullspace(op, 16).dimension();
  }
  return {null.dimension() == 1 && distance <= 1e-6 && random_kernel == 0,
          fmt("factory kernel dim %zu, |v - f| = %.2e (tol 1e-6), random r0 kernels %zu", null.dimension(), distance,
              random_kernel)};
}

Outcome unique_continuation() {
  const auto null = galerkin_nullspace(golden_operator(), 16);
  const double c = unique_continuation_constant(null, {{0.0}, {0.25}}).constant;
  const std::size_t m = 10000;
  double riemann = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    riemann += std::norm(naive_evaluate(null.basis[0], {0.25 * (static_cast<double>(i) + 0.5) / static_cast<double>(m)}));
  riemann *= 0.25 / static_cast<double>(m);
  int violations = 0;
  double previous = 0.0;
  for (int j = 1; j <= 20; ++j) {
    const double cj = unique_continuation_constant(null, {{0.0}, {0.05 * j}}).constant;
    if (cj < previous - 1e-12) ++violations;
    previous = cj;
  }
  const double err = std::abs(c - riemann);
  return {c > 0.0 && err <= 1e-6 && violations == 0,
          fmt("c = %.8f, |c - Riemann| = %.2e (tol 1e-6), %d monotonicity violations on 20 boxes", c, err, violations)};
}

Outcome wavefront() {
  const auto g = golden_instance(kLadder);
  const auto grid = PhaseSpaceGrid::standard(2, 32);
  const auto report = nonconcentration_report(wavefront_mass_map(g.factory.family, grid));
  const auto bump = nonconcentration_report(wavefront_mass_map(concentrating_bump_family(2, kLadder), grid));
  return {report.fills_torus && report.lagrangian_supported && report.nonempty_interior && !bump.fills_torus,
          fmt("fill %.3f, lagrangian %s, interior %s; bump fill %.3f (%s)", report.in_fraction,
              report.lagrangian_supported ? "yes" : "no", report.nonempty_interior ? "yes" : "no", bump.in_fraction,
              bump.fills_torus ? "fills" : "fails")};
}

// lambda/h - m/4 with lambda = p/q and h = a/b is (4 p b - m q a) / (4 q a).
bool maslov_oracle(const std::vector<Rational>& lambda, const std::vector<Integer>& m, const Rational& h) {
  const Integer a = numerator(h), b = denominator(h);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Integer p = numerator(lambda[i]), q = denominator(lambda[i]);
    if ((4 * p * b - m[i] * q * a) % (4 * q * a) != 0) return false;
  }
  return true;
}

Outcome maslov() {
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<int> len(1, 4), small(-12, 12), den(1, 12), hnum(1, 6);
  int disagreements = 0, admissible = 0;
  for (int t = 0; t < 1000; ++t) {
    const Rational h(hnum(rng), den(rng));
    std::vector<Rational> lambda;
    std::vector<Integer> m;
    for (int i = 0, n = len(rng); i < n; ++i) {
      m.emplace_back(small(rng));
      // Half the instances are built admissible so both outcomes are exercised.
      if (t % 2 == 0)
        lambda.push_back(h * (Rational(small(rng)) + Rational(m.back(), 4)));
      else
        lambda.emplace_back(small(rng), den(rng));
    }
    const bool got = maslov_admissible(lambda, m, h);
    admissible += got;
    if (got != maslov_oracle(lambda, m, h)) ++disagreements;
  }
  return {disagreements == 0, fmt("%d/1000 disagreements, %d admissible", disagreements, admissible)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const auto cfg = parse_config(slurp(std::filesystem::path(QUASILAB_TEST_DATA) / "golden.json"));
  const auto root = std::filesystem::temp_directory_path() / "quasilab_acceptance";
  std::filesystem::remove_all(root);
  const int a = run_pipeline(cfg, Command::All, {root / "threads1", 1});
  const int b = run_pipeline(cfg, Command::All, {root / "threads4", 4});
  int differing = 0;
  for (const char* f : {"report.json", "massmap.csv", "decay.csv"})
    if (slurp(root / "threads1" / f) != slurp(root / "threads4" / f)) ++differing;
  std::filesystem::remove_all(root);
  return {a == 0 && b == 0 && differing == 0,
          fmt("exit codes %d/%d, %d of 3 artifacts differ between 1 and 4 threads", a, b, differing)};
}

}  // namespace

int main() {
  criterion(1, "quasiconvexity implies isoenergetic nondegeneracy", 5.0, quasiconvex_implies_nondegenerate);
  const auto instances = lattice_instances();
  criterion(2, "relation lattice vs enumeration", 30.0, [&] { return lattice_matches_enumeration(instances); });
  criterion(3, "splitting invariants", 0.0, [&] { return splitting_invariants(instances); });
  criterion(4, "factory quasimode order", 10.0, factory_order);
  criterion(5, "mode concentration", 10.0, mode_concentration);
  criterion(6, "Galerkin nullspace", 10.0, galerkin);
  criterion(7, "unique-continuation constant", 0.0, unique_continuation);
  criterion(8, "wavefront verdicts", 60.0, wavefront);
  criterion(9, "Maslov congruence", 1.0, maslov);
  criterion(10, "end-to-end determinism", 0.0, determinism);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
