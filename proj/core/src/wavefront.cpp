#include "quasilab/wavefront.hpp"

#include "quasilab/grid_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace quasilab {

namespace {

constexpr double kWeightFloor = 1e-18;
const double kLogWeightFloor = -std::log(kWeightFloor);
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// S(xi, h) = sum_a exp(-(2 pi h a - xi)^2 / h), over the terms above the weight floor.
double axis_sum(double xi, double h) {
  const double reach = std::sqrt(kLogWeightFloor * h);
  const auto lo = static_cast<std::int64_t>(std::floor((xi - reach) / (kTwoPi * h)));
  const auto hi = static_cast<std::int64_t>(std::ceil((xi + reach) / (kTwoPi * h)));
  double sum = 0.0;
  for (std::int64_t a = lo; a <= hi; ++a) {
    const double d = kTwoPi * h * static_cast<double>(a) - xi;
    sum += std::exp(-d * d / h);
  }
  return sum;
}

double axis_max(double xi, double h) {
  const double a = std::round(xi / (kTwoPi * h));
  const double d = kTwoPi * h * a - xi;
  return std::exp(-d * d / h);
}

// Fourier coefficient of the unnormalized coherent state, up to the common
// factor (2 pi h)^{n/2} e^{-2 pi i alpha.x0}: exp(-|xi0 - 2 pi h alpha|^2 / (2h)).
double gaussian_weight(const Multiindex& alpha, std::span<const double> xi0, double h) {
  double exponent = 0.0;
  for (std::size_t d = 0; d < alpha.size(); ++d) {
    const double t = xi0[d] - kTwoPi * h * static_cast<double>(alpha[d]);
    exponent += t * t / (2.0 * h);
  }
  return exponent > kLogWeightFloor ? 0.0 : std::exp(-exponent);
}

void check_args(const TrigPolynomial& u, std::span<const double> xi0, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("coherent mass: h must be positive");
  if (xi0.size() != u.dimension()) throw std::invalid_argument("coherent mass: covector dimension mismatch");
}

}  // namespace

PhaseSpaceGrid PhaseSpaceGrid::standard(std::size_t dimension, std::size_t x_points) {
  PhaseSpaceGrid grid;
  grid.dimension = dimension;
  grid.x_points = x_points;
  grid.xi_points.emplace_back(dimension, 0.0);
  for (std::size_t i = 0; i < dimension; ++i) {
    for (double sign : {1.0, -1.0}) {
      std::vector<double> xi(dimension, 0.0);
      xi[i] = sign;
      grid.xi_points.push_back(std::move(xi));
    }
  }
  return grid;
}

std::size_t PhaseSpaceGrid::x_count() const {
  std::size_t count = 1;
  for (std::size_t i = 0; i < dimension; ++i) count *= x_points;
  return count;
}

std::vector<double> PhaseSpaceGrid::x_node(std::size_t flat) const {
  std::vector<double> x(dimension);
  for (std::size_t i = dimension; i-- > 0;) {
    x[i] = static_cast<double>(flat % x_points) / static_cast<double>(x_points);
    flat /= x_points;
  }
  return x;
}

std::size_t PhaseSpaceGrid::zero_index() const {
  for (std::size_t i = 0; i < xi_points.size(); ++i)
    if (std::all_of(xi_points[i].begin(), xi_points[i].end(), [](double v) { return v == 0.0; })) return i;
  throw std::invalid_argument("phase-space grid does not contain the zero covector");
}

void PhaseSpaceGrid::validate() const {
  if (dimension == 0) throw std::invalid_argument("phase-space grid: dimension must be positive");
  for (const auto& xi : xi_points) {
    if (xi.size() != dimension) throw std::invalid_argument("phase-space grid: covector dimension mismatch");
    for (double v : xi)
      if (!std::isfinite(v)) throw std::invalid_argument("phase-space grid: covector entries must be finite");
  }
  zero_index();
}

double coherent_mass(const TrigPolynomial& u, std::span<const double> x0, std::span<const double> xi0, double h) {
  check_args(u, xi0, h);
  if (x0.size() != u.dimension()) throw std::invalid_argument("coherent mass: point dimension mismatch");
  Complex overlap{};
  for (const auto& [alpha, c] : u) {
    const double w = gaussian_weight(alpha, xi0, h);
    if (w == 0.0) continue;
    double phase = 0.0;
    for (std::size_t d = 0; d < alpha.size(); ++d) phase += static_cast<double>(alpha[d]) * x0[d];
    overlap += c * w * std::polar(1.0, kTwoPi * phase);
  }
  double norm = 1.0;
  for (double xi : xi0) norm *= axis_sum(xi, h);
  return std::norm(overlap) / norm;
}

double coherent_normalization(std::span<const double> xi0, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("coherent normalization: h must be positive");
  double kappa = 1.0;
  for (double xi : xi0) kappa *= axis_max(xi, h) / axis_sum(xi, h);
  return kappa;
}

MassMap::MassMap(PhaseSpaceGrid grid, std::vector<double> h_ladder)
    : grid_(std::move(grid)), h_ladder_(std::move(h_ladder)) {
  masses_.assign(grid_.xi_points.size() * h_ladder_.size() * grid_.x_count(), 0.0);
  kappa_.assign(grid_.xi_points.size() * h_ladder_.size(), 0.0);
}

void MassMap::fit_all() {
  fits_.clear();
  if (masses_.empty()) return;
  const std::size_t xs = grid_.x_count();
  fits_.reserve(grid_.xi_points.size() * xs);
  std::vector<double> series(h_ladder_.size());
  for (std::size_t xi = 0; xi < grid_.xi_points.size(); ++xi) {
    for (std::size_t x = 0; x < xs; ++x) {
      for (std::size_t h = 0; h < h_ladder_.size(); ++h) series[h] = mass(xi, h, x);
      fits_.push_back(fit_decay_exponent(h_ladder_, series));
    }
  }
}

MassMap wavefront_mass_map(const QuasimodeFamily& family, const PhaseSpaceGrid& grid, unsigned threads) {
  grid.validate();
  if (family.size() > 0 && family.dimension() != grid.dimension)
    throw std::invalid_argument("wavefront_mass_map: family and grid dimensions differ");
  MassMap map(grid, family.h_ladder);
  if (grid.x_points == 0 || family.size() == 0) return map;

  const std::size_t tasks = grid.xi_points.size() * family.size();
  const std::size_t xs = grid.x_count();
  auto run = [&](std::size_t task) {
    const std::size_t xi = task / family.size();
    const std::size_t hi = task % family.size();
    const double h = family.h_ladder[hi];
    const auto& xi0 = grid.xi_points[xi];
    double peak = 1.0;
    for (double v : xi0) peak *= axis_max(v, h);
    const double scale = 1.0 / std::sqrt(peak);

    TrigPolynomial weighted(grid.dimension);
    for (const auto& [alpha, c] : family.members[hi]) {
      const double w = gaussian_weight(alpha, xi0, h);
      if (w != 0.0) weighted.set(alpha, c * (w * scale));
    }
    const GridValues values = evaluate_on_grid(weighted, grid.x_points);
    for (std::size_t x = 0; x < xs; ++x) map.mass(xi, hi, x) = std::norm(values.values[x]);
    map.kappa_[xi * family.size() + hi] = coherent_normalization(xi0, h);
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, tasks);
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) run(t);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < tasks; t += workers) run(t);
      });
    for (auto& t : pool) t.join();
  }
  if (family.size() >= 4) map.fit_all();
  return map;
}

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::In: return "IN";
    case NodeClass::Out: return "OUT";
    case NodeClass::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

NonconcentrationReport nonconcentration_report(const MassMap& map, const WavefrontThresholds& thresholds) {
  NonconcentrationReport report;
  if (map.empty()) return report;
  if (!map.fitted()) throw std::invalid_argument("nonconcentration_report: mass map has not been fitted");
  const auto& grid = map.grid();
  const std::size_t xs = grid.x_count();
  const std::size_t zero = grid.zero_index();

  report.classes.resize(grid.xi_points.size());
  for (std::size_t xi = 0; xi < grid.xi_points.size(); ++xi) {
    for (std::size_t x = 0; x < xs; ++x) {
      const double e = map.fit(xi, x).exponent;
      NodeClass c = NodeClass::Inconclusive;
      if (e < thresholds.in_exponent) c = NodeClass::In;
      else if (e > thresholds.out_exponent) c = NodeClass::Out;
      report.classes[xi].push_back(c);
      if (xi != zero && c != NodeClass::Out) ++report.out_of_place_nodes;
    }
  }
  const auto& base = report.classes[zero];
  const auto in_count = static_cast<double>(std::count(base.begin(), base.end(), NodeClass::In));
  report.in_fraction = in_count / static_cast<double>(xs);
  report.fills_torus = report.in_fraction >= thresholds.fill_fraction;
  report.lagrangian_supported = report.out_of_place_nodes == 0;

  // A cube of 2^n grid-adjacent IN nodes, wrapping around the torus.
  const std::size_t n = grid.dimension;
  const std::size_t g = grid.x_points;
  if (g >= 2) {
    for (std::size_t corner = 0; corner < xs && !report.nonempty_interior; ++corner) {
      std::vector<std::size_t> idx(n);
      std::size_t rest = corner;
      for (std::size_t i = n; i-- > 0;) {
        idx[i] = rest % g;
        rest /= g;
      }
      bool all_in = true;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n) && all_in; ++mask) {
        std::size_t flat = 0;
        for (std::size_t i = 0; i < n; ++i) flat = flat * g + (idx[i] + ((mask >> i) & 1U)) % g;
        all_in = base[flat] == NodeClass::In;
      }
      report.nonempty_interior = all_in;
    }
  }

  report.min_mass_along_ladder = std::numeric_limits<double>::infinity();
  std::size_t persistent = 0;
  for (std::size_t x = 0; x < xs; ++x) {
    double low = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < map.h_ladder().size(); ++h) low = std::min(low, map.mass(zero, h, x));
    report.min_mass_along_ladder = std::min(report.min_mass_along_ladder, low);
    if (low > 1e-6) ++persistent;
  }
  report.persistent_fraction = static_cast<double>(persistent) / static_cast<double>(xs);
  return report;
}

QuasimodeFamily concentrating_bump_family(std::size_t dimension, const std::vector<double>& h_ladder) {
  if (dimension == 0) throw std::invalid_argument("concentrating_bump_family: dimension must be positive");
  QuasimodeFamily family;
  family.h_ladder = h_ladder;
  for (double h : h_ladder) {
    if (!(h > 0.0)) throw std::invalid_argument("concentrating_bump_family: h must be positive");
    // Periodizing exp(-|x|^2/(2h)) gives coefficients proportional to exp(-2 pi^2 h |alpha|^2).
    const double rate = 2.0 * std::numbers::pi * std::numbers::pi * h;
    const auto radius = static_cast<std::int64_t>(std::ceil(std::sqrt(kLogWeightFloor / rate)));
    TrigPolynomial u(dimension);
    Multiindex alpha(dimension, -radius);
    while (true) {
      double sq = 0.0;
      for (auto a : alpha) sq += static_cast<double>(a * a);
      if (rate * sq <= kLogWeightFloor) u.set(alpha, std::exp(-rate * sq));
      std::size_t i = dimension;
      while (i > 0 && alpha[i - 1] == radius) alpha[--i] = -radius;
      if (i == 0) break;
      ++alpha[i - 1];
    }
    u *= 1.0 / u.l2_norm();
    family.members.push_back(u);
    family.norms.push_back(u.l2_norm());
  }
  return family;
}

}  // namespace quasilab
