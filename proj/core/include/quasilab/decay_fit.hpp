#pragma once

#include <span>
#include <vector>

namespace quasilab {

/// Least-squares slope of log(norm) against log(h).
struct DecayFit {
  double exponent = 0.0;
  double residual = 0.0;        ///< max |log norm - fitted line|
  bool superpolynomial = false;  ///< some norm vanished: exponent reported as +inf
  bool reliable = true;          ///< residual <= 0.5
  std::vector<double> h;
  std::vector<double> norms;
};

inline constexpr double kUnreliableFitResidual = 0.5;

/// Requires at least 4 ladder points and nonnegative norms. Any exactly zero
/// norm short-circuits to exponent = +inf.
DecayFit fit_decay_exponent(std::span<const double> h_ladder, std::span<const double> norms);

/// h = 2^{-j} for j = j_min..j_max (decreasing h).
std::vector<double> dyadic_ladder(int j_min, int j_max);

}  // namespace quasilab
