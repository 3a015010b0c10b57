#include "quasilab/decay_fit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace quasilab {

DecayFit fit_decay_exponent(std::span<const double> h_ladder, std::span<const double> norms) {
  if (h_ladder.size() != norms.size()) throw std::invalid_argument("fit_decay_exponent: length mismatch");
  if (h_ladder.size() < 4) throw std::invalid_argument("fit_decay_exponent: need at least 4 ladder points");
  DecayFit fit;
  fit.h.assign(h_ladder.begin(), h_ladder.end());
  fit.norms.assign(norms.begin(), norms.end());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (!(h_ladder[i] > 0.0)) throw std::invalid_argument("fit_decay_exponent: h must be positive");
    if (norms[i] < 0.0 || std::isnan(norms[i])) throw std::invalid_argument("fit_decay_exponent: negative norm");
    if (norms[i] == 0.0) fit.superpolynomial = true;
  }
  if (fit.superpolynomial) {
    fit.exponent = std::numeric_limits<double>::infinity();
    fit.residual = 0.0;
    return fit;
  }

  const auto count = static_cast<double>(norms.size());
  double mean_x = 0.0, mean_y = 0.0;
  std::vector<double> xs(norms.size()), ys(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    xs[i] = std::log(h_ladder[i]);
    ys[i] = std::log(norms[i]);
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_decay_exponent: ladder needs distinct h values");
  fit.exponent = sxy / sxx;
  const double intercept = mean_y - fit.exponent * mean_x;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(ys[i] - (intercept + fit.exponent * xs[i])));
  fit.reliable = fit.residual <= kUnreliableFitResidual;
  return fit;
}

std::vector<double> dyadic_ladder(int j_min, int j_max) {
  if (j_min > j_max) throw std::invalid_argument("dyadic_ladder: empty range");
  std::vector<double> h;
  for (int j = j_min; j <= j_max; ++j) h.push_back(std::ldexp(1.0, -j));
  return h;
}

}  // namespace quasilab
