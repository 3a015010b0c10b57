#include "quasilab/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quasilab {

Multiindex operator+(const Multiindex& a, const Multiindex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiindex dimension mismatch");
  Multiindex c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Multiindex operator-(const Multiindex& a, const Multiindex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multiindex dimension mismatch");
  Multiindex c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

TrigPolynomial TrigPolynomial::character(const Multiindex& alpha, Complex value) {
  TrigPolynomial p(alpha.size());
  p.set(alpha, value);
  return p;
}

TrigPolynomial TrigPolynomial::constant(std::size_t dim, Complex value) {
  return character(Multiindex(dim, 0), value);
}

Complex TrigPolynomial::coefficient(const Multiindex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void TrigPolynomial::set(const Multiindex& alpha, Complex value) {
  if (alpha.size() != dim_) throw std::invalid_argument("trig polynomial: multiindex dimension mismatch");
  if (value == Complex{}) {
    coeffs_.erase(alpha);
  } else {
    coeffs_[alpha] = value;
  }
}

void TrigPolynomial::add(const Multiindex& alpha, Complex value) {
  if (value == Complex{}) return;
  if (alpha.size() != dim_) throw std::invalid_argument("trig polynomial: multiindex dimension mismatch");
  auto [it, inserted] = coeffs_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second == Complex{}) coeffs_.erase(it);
  }
}

double TrigPolynomial::l2_norm() const {
  double sum = 0.0;
  for (const auto& [alpha, c] : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

double TrigPolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [alpha, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex TrigPolynomial::inner(const TrigPolynomial& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("inner product: dimension mismatch");
  Complex sum{};
  const auto& small = coeffs_.size() <= other.coeffs_.size() ? coeffs_ : other.coeffs_;
  const bool this_small = &small == &coeffs_;
  for (const auto& [alpha, c] : small) {
    Complex d = this_small ? other.coefficient(alpha) : coefficient(alpha);
    sum += this_small ? c * std::conj(d) : d * std::conj(c);
  }
  return sum;
}

Complex TrigPolynomial::evaluate(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("evaluate: dimension mismatch");
  Complex sum{};
  for (const auto& [alpha, c] : coeffs_) {
    double phase = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) phase += static_cast<double>(alpha[i]) * x[i];
    sum += c * std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  return sum;
}

std::int64_t TrigPolynomial::support_radius() const {
  std::int64_t r = 0;
  for (const auto& [alpha, c] : coeffs_)
    for (auto a : alpha) r = std::max<std::int64_t>(r, a < 0 ? -a : a);
  return r;
}

bool TrigPolynomial::is_real(double tol) const {
  const double bound = tol * std::max(max_abs_coefficient(), 1e-300);
  for (const auto& [alpha, c] : coeffs_) {
    Multiindex neg(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
    if (std::abs(c - std::conj(coefficient(neg))) > bound) return false;
  }
  return true;
}

TrigPolynomial TrigPolynomial::real_part() const {
  TrigPolynomial out(dim_);
  for (const auto& [alpha, c] : coeffs_) {
    Multiindex neg(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
    out.add(alpha, 0.5 * c);
    out.add(neg, 0.5 * std::conj(c));
  }
  return out;
}

TrigPolynomial TrigPolynomial::truncated(double threshold) const {
  TrigPolynomial out(dim_);
  for (const auto& [alpha, c] : coeffs_)
    if (std::abs(c) >= threshold) out.coeffs_.emplace(alpha, c);
  return out;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("sum: dimension mismatch");
  for (const auto& [alpha, c] : other.coeffs_) add(alpha, c);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& other) {
  if (other.dim_ != dim_) throw std::invalid_argument("difference: dimension mismatch");
  for (const auto& [alpha, c] : other.coeffs_) add(alpha, -c);
  return *this;
}

TrigPolynomial& TrigPolynomial::operator*=(Complex s) {
  if (s == Complex{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [alpha, c] : coeffs_) c *= s;
  return *this;
}

TrigPolynomial convolve(const TrigPolynomial& a, const TrigPolynomial& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("convolve: dimension mismatch");
  TrigPolynomial out(a.dimension());
  for (const auto& [alpha, ca] : a)
    for (const auto& [beta, cb] : b) out.add(alpha + beta, ca * cb);
  return out;
}

}  // namespace quasilab
