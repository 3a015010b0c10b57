#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quasilab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// A declared basis 1 = b_1, b_2, ..., b_m of real numbers that the caller
/// asserts are linearly independent over the rationals. Independence is
/// trusted, never checked; the decimal values are only used to turn exact
/// quantities into floating point magnitudes.
class IrrationalityBasis {
 public:
  IrrationalityBasis();  // the rationals: {1}
  IrrationalityBasis(std::vector<std::string> names, std::vector<double> values);

  std::size_t dimension() const { return values_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const IrrationalityBasis&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
};

/// A real number sum_t coeffs[t] * b_t with exact rational coordinates over an
/// IrrationalityBasis. Equality is exact coordinatewise equality.
class BasisNumber {
 public:
  BasisNumber() = default;
  explicit BasisNumber(std::vector<Rational> coeffs);

  static BasisNumber zero(std::size_t basis_dim);
  static BasisNumber rational(const Rational& q, std::size_t basis_dim);

  std::size_t basis_dimension() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t t) const { return coeffs_[t]; }

  bool is_zero() const;
  double to_double(const IrrationalityBasis& basis) const;

  BasisNumber& operator+=(const BasisNumber& other);
  BasisNumber& operator-=(const BasisNumber& other);
  BasisNumber& operator*=(const Rational& s);

  friend BasisNumber operator+(BasisNumber a, const BasisNumber& b) { return a += b; }
  friend BasisNumber operator-(BasisNumber a, const BasisNumber& b) { return a -= b; }
  friend BasisNumber operator*(BasisNumber a, const Rational& s) { return a *= s; }
  friend BasisNumber operator*(const Rational& s, BasisNumber a) { return a *= s; }
  BasisNumber operator-() const;

  bool operator==(const BasisNumber&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// omega-bar: n frequencies, each an exact number over a common basis.
class FrequencyVector {
 public:
  FrequencyVector() = default;
  explicit FrequencyVector(std::vector<BasisNumber> entries);

  std::size_t dimension() const { return entries_.size(); }
  std::size_t basis_dimension() const;
  const std::vector<BasisNumber>& entries() const { return entries_; }
  const BasisNumber& operator[](std::size_t i) const { return entries_[i]; }

  bool is_zero() const;
  std::vector<double> to_doubles(const IrrationalityBasis& basis) const;

  /// sum_i alpha_i * omega_i, exactly.
  BasisNumber dot(const std::vector<std::int64_t>& alpha) const;

  bool operator==(const FrequencyVector&) const = default;

 private:
  std::vector<BasisNumber> entries_;
};

/// Frequencies that are plain rationals (basis {1}); convenience for tests and configs.
FrequencyVector rational_frequencies(const std::vector<Rational>& values);

}  // namespace quasilab
