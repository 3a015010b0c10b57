#include "quasilab/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace quasilab {

namespace {

// floor(a / b) for b > 0
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && (a < 0)) q -= 1;
  return q;
}

struct ExtendedGcd {
  Integer g, x, y;  // x*a + y*b == g
};

ExtendedGcd extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    Integer x2 = x0 - q * x1;
    Integer y2 = y0 - q * y1;
    x0 = std::move(x1);
    y0 = std::move(y1);
    x1 = std::move(x2);
    y1 = std::move(y2);
  }
  return {a, x0, y0};
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged integer matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

bool IntMatrix::is_zero_column(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, j) != 0) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Integer(1);
  IntMatrix a = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("integer matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw std::domain_error("singular integer matrix");
    std::swap(a[p], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = a[i][n + j];
      if (boost::multiprecision::denominator(q) != 1)
        throw std::domain_error("matrix is not unimodular: inverse has non-integer entries");
      inv(i, j) = boost::multiprecision::numerator(q);
    }
  return inv;
}

std::vector<BasisNumber> multiply(const IntMatrix& m, const std::vector<BasisNumber>& x) {
  if (m.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  const std::size_t basis_dim = x.empty() ? 1 : x[0].basis_dimension();
  std::vector<BasisNumber> y(m.rows(), BasisNumber::zero(basis_dim));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) y[i] += x[j] * Rational(m(i, j));
  return y;
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t c = 0;

  auto combine = [&](std::size_t i, std::size_t j) {
    // Unimodular 2x2 column transform clearing h(i, j) into h(i, c).
    const Integer a_ic = h(i, c);
    const Integer b_ij = h(i, j);
    if (a_ic != 0 && b_ij % a_ic == 0) {
      Integer q = b_ij / a_ic;
      h.add_column_multiple(j, c, -q);
      u.add_column_multiple(j, c, -q);
      return;
    }
    auto [g, x, y] = extended_gcd(a_ic, b_ij);
    Integer p = -b_ij / g;
    Integer s = a_ic / g;
    for (IntMatrix* mat : {&h, &u}) {
      for (std::size_t r = 0; r < mat->rows(); ++r) {
        Integer vc = (*mat)(r, c);
        Integer vj = (*mat)(r, j);
        (*mat)(r, c) = x * vc + y * vj;
        (*mat)(r, j) = p * vc + s * vj;
      }
    }
  };

  for (std::size_t i = 0; i < m && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (h(i, j) != 0) combine(i, j);
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      h.negate_column(c);
      u.negate_column(c);
    }
    const Integer pivot = h(i, c);
    for (std::size_t l = 0; l < c; ++l) {
      Integer q = floor_div(h(i, l), pivot);
      if (q != 0) {
        h.add_column_multiple(l, c, -q);
        u.add_column_multiple(l, c, -q);
      }
    }
    ++c;
  }
  return {std::move(h), std::move(u), c};
}

}  // namespace quasilab
