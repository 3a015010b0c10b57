#pragma once

#include "quasilab/decay_fit.hpp"
#include "quasilab/quasimode.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace quasilab {

/// Phase-space sample points: a uniform x-grid (x_points per axis) times a
/// finite list of covectors xi0, which must contain 0.
struct PhaseSpaceGrid {
  std::size_t dimension = 1;
  std::size_t x_points = 32;
  std::vector<std::vector<double>> xi_points;

  /// {0} together with +-e_i for each axis.
  static PhaseSpaceGrid standard(std::size_t dimension, std::size_t x_points = 32);

  std::size_t x_count() const;
  std::vector<double> x_node(std::size_t flat) const;
  /// Index of the zero covector.
  std::size_t zero_index() const;
  void validate() const;
};

/// |<u, phi>|^2 for the L2-normalized periodized coherent state
/// phi ~ exp(i xi0.(x - x0)/h - |x - x0|^2 / (2h)), summed in coefficient space.
double coherent_mass(const TrigPolynomial& u, std::span<const double> x0, std::span<const double> xi0, double h);

/// Largest value of coherent_mass over single characters e_alpha at (xi0, h):
/// the product over axes of max_a exp(-(2 pi h a - xi_d)^2 / h) / S_d.
/// Dividing by it puts a smooth nonvanishing symbol at order h^0.
double coherent_normalization(std::span<const double> xi0, double h);

/// Coherent masses divided by coherent_normalization, on every node and ladder point.
class MassMap {
 public:
  MassMap() = default;
  MassMap(PhaseSpaceGrid grid, std::vector<double> h_ladder);

  const PhaseSpaceGrid& grid() const { return grid_; }
  const std::vector<double>& h_ladder() const { return h_ladder_; }
  bool empty() const { return masses_.empty(); }
  bool fitted() const { return !fits_.empty(); }

  double mass(std::size_t xi, std::size_t h, std::size_t x) const { return masses_[slot(xi, h, x)]; }
  double& mass(std::size_t xi, std::size_t h, std::size_t x) { return masses_[slot(xi, h, x)]; }
  double kappa(std::size_t xi, std::size_t h) const { return kappa_[xi * h_ladder_.size() + h]; }
  const DecayFit& fit(std::size_t xi, std::size_t x) const { return fits_[xi * grid_.x_count() + x]; }

  /// Fits log(mass) against log(h) per node; needs at least 4 ladder points.
  void fit_all();

 private:
  friend MassMap wavefront_mass_map(const QuasimodeFamily&, const PhaseSpaceGrid&, unsigned);
  std::size_t slot(std::size_t xi, std::size_t h, std::size_t x) const {
    return (xi * h_ladder_.size() + h) * grid_.x_count() + x;
  }

  PhaseSpaceGrid grid_;
  std::vector<double> h_ladder_;
  std::vector<double> masses_;
  std::vector<double> kappa_;
  std::vector<DecayFit> fits_;
};

/// Evaluates every (xi0, h) slice with one FFT and fits every node. Work is
/// split over `threads` workers writing disjoint slots, so the result does not
/// depend on the thread count.
MassMap wavefront_mass_map(const QuasimodeFamily& family, const PhaseSpaceGrid& grid, unsigned threads = 1);

enum class NodeClass { In, Out, Inconclusive };

const char* to_string(NodeClass c);

struct WavefrontThresholds {
  double fill_fraction = 0.95;
  double in_exponent = 0.5;
  double out_exponent = 2.0;
};

struct NonconcentrationReport {
  std::vector<std::vector<NodeClass>> classes;  ///< [xi][x]
  double in_fraction = 0.0;                     ///< at xi0 = 0
  bool fills_torus = false;
  bool lagrangian_supported = false;
  bool nonempty_interior = false;
  std::size_t out_of_place_nodes = 0;  ///< xi0 != 0 nodes that are not OUT
  /// Diagnostic only: over xi0 = 0 nodes, the smallest normalized mass seen on the ladder.
  double min_mass_along_ladder = 0.0;
  /// Fraction of xi0 = 0 nodes whose mass stays above 1e-6 at every ladder point.
  double persistent_fraction = 0.0;
};

NonconcentrationReport nonconcentration_report(const MassMap& map, const WavefrontThresholds& thresholds = {});

/// L2-normalized periodized Gaussian of width sqrt(h) centred at the origin:
/// a family concentrating at a point, used as a negative control.
QuasimodeFamily concentrating_bump_family(std::size_t dimension, const std::vector<double>& h_ladder);

}  // namespace quasilab
