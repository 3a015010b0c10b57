#include "quasilab/grid_transform.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace quasilab {

namespace {

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

void transform_in_place(std::vector<Complex>& data, std::size_t dim, std::size_t points, int sign) {
  if (dim == 0) return;
  std::vector<int> shape(dim, static_cast<int>(points));
  std::unique_ptr<fftw_complex, FftwFree> buffer(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * data.size())));
  if (!buffer) throw std::bad_alloc();
  std::memcpy(buffer.get(), data.data(), sizeof(fftw_complex) * data.size());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dim), shape.data(), buffer.get(), buffer.get(), sign,
                         FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::memcpy(static_cast<void*>(data.data()), buffer.get(), sizeof(fftw_complex) * data.size());
}

std::size_t grid_size(std::size_t dim, std::size_t points) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= points;
  return total;
}

}  // namespace

std::size_t GridValues::flat_index(const std::vector<std::size_t>& j) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dimension; ++i) idx = idx * points + j[i];
  return idx;
}

std::vector<double> GridValues::node(std::size_t flat) const {
  std::vector<double> x(dimension);
  for (std::size_t i = dimension; i-- > 0;) {
    x[i] = static_cast<double>(flat % points) / static_cast<double>(points);
    flat /= points;
  }
  return x;
}

GridValues evaluate_on_grid(const TrigPolynomial& p, std::size_t points) {
  if (points == 0) throw std::invalid_argument("evaluate_on_grid: zero points");
  GridValues grid{p.dimension(), points, std::vector<Complex>(grid_size(p.dimension(), points))};
  const auto g = static_cast<std::int64_t>(points);
  for (const auto& [alpha, c] : p) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      std::int64_t r = alpha[i] % g;
      if (r < 0) r += g;
      idx = idx * points + static_cast<std::size_t>(r);
    }
    grid.values[idx] += c;
  }
  transform_in_place(grid.values, grid.dimension, points, FFTW_BACKWARD);
  return grid;
}

TrigPolynomial coefficients_from_grid(const GridValues& grid) {
  std::vector<Complex> data = grid.values;
  transform_in_place(data, grid.dimension, grid.points, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(data.size());
  TrigPolynomial out(grid.dimension);
  const auto g = static_cast<std::int64_t>(grid.points);
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    Multiindex alpha(grid.dimension);
    std::size_t rest = flat;
    for (std::size_t i = grid.dimension; i-- > 0;) {
      auto r = static_cast<std::int64_t>(rest % grid.points);
      rest /= grid.points;
      alpha[i] = r >= (g + 1) / 2 ? r - g : r;
    }
    out.set(alpha, data[flat] * scale);
  }
  return out;
}

}  // namespace quasilab
