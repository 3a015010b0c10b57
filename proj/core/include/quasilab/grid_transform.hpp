#pragma once

#include "quasilab/trig_polynomial.hpp"

#include <cstddef>
#include <vector>

namespace quasilab {

/// Samples of a function on the uniform grid x_j = j / points (per axis),
/// stored row-major with the last axis fastest.
struct GridValues {
  std::size_t dimension = 0;
  std::size_t points = 0;
  std::vector<Complex> values;

  std::size_t flat_index(const std::vector<std::size_t>& j) const;
  std::vector<double> node(std::size_t flat) const;
};

/// Exact evaluation of p on the grid (coefficients folded modulo `points`,
/// then one inverse FFT).
GridValues evaluate_on_grid(const TrigPolynomial& p, std::size_t points);

/// Discrete Fourier coefficients of grid samples, frequencies in
/// [-points/2, points/2) per axis. Exact inverse of evaluate_on_grid for
/// polynomials whose support fits in that window.
TrigPolynomial coefficients_from_grid(const GridValues& grid);

}  // namespace quasilab
