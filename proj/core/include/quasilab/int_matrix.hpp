#pragma once

#include "quasilab/basis_number.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace quasilab {

/// Dense matrix of arbitrary precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix transposed() const;

  // Column operations used by the normal-form routines.
  void swap_columns(std::size_t a, std::size_t b);
  void negate_column(std::size_t j);
  /// col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  Integer determinant() const;  // fraction-free Bareiss elimination
  bool is_zero_column(std::size_t j) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Inverse of a unimodular integer matrix. Throws std::domain_error when the
/// matrix is singular or its inverse is not integral.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Exact rational matrix-vector product M * x with x given over a basis.
std::vector<BasisNumber> multiply(const IntMatrix& m, const std::vector<BasisNumber>& x);

struct HermiteResult {
  IntMatrix H;  ///< A * U, column Hermite normal form
  IntMatrix U;  ///< unimodular
  std::size_t rank = 0;
};

/// Column Hermite normal form: H = A * U with U unimodular. Nonzero columns
/// come first with strictly increasing pivot rows and positive pivots; zero
/// above each pivot; entries left of a pivot are reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& a);

}  // namespace quasilab
