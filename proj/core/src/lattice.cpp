#include "quasilab/lattice.hpp"

#include <stdexcept>

namespace quasilab {

namespace {

IntMatrix nonzero_columns(const HermiteResult& hnf) { return hnf.H.columns(0, hnf.rank); }

// Row t of the result holds the t-th rational coordinate of every entry,
// scaled by the lcm of that row's denominators.
IntMatrix coordinate_rows(const std::vector<BasisNumber>& omega) {
  const std::size_t n = omega.size();
  const std::size_t m = n == 0 ? 0 : omega[0].basis_dimension();
  IntMatrix a(m, n);
  for (std::size_t t = 0; t < m; ++t) {
    Integer lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Integer den = boost::multiprecision::denominator(omega[i][t]);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Rational scaled = omega[i][t] * Rational(lcm);
      a(t, i) = boost::multiprecision::numerator(scaled);
    }
  }
  return a;
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

IntegerLattice IntegerLattice::spanned_by(const IntMatrix& generators) {
  auto hnf = hermite_normal_form(generators);
  return IntegerLattice(generators.rows(), nonzero_columns(hnf));
}

bool IntegerLattice::contains(const Multiindex& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("lattice membership: dimension mismatch");
  // Forward substitution through the echelon profile of the HNF basis.
  std::vector<Integer> rest(v.begin(), v.end());
  std::size_t row = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    while (row < ambient_ && basis_(row, j) == 0) {
      if (rest[row] != 0) return false;
      ++row;
    }
    if (row == ambient_) break;
    const Integer& pivot = basis_(row, j);
    if (rest[row] % pivot != 0) return false;
    Integer q = rest[row] / pivot;
    for (std::size_t i = row; i < ambient_; ++i) rest[i] -= q * basis_(i, j);
    ++row;
  }
  for (const auto& x : rest)
    if (x != 0) return false;
  return true;
}

bool IntegerLattice::in_rational_span(const Multiindex& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("lattice span: dimension mismatch");
  IntMatrix extended(ambient_, rank() + 1);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t j = 0; j < rank(); ++j) extended(i, j) = basis_(i, j);
    extended(i, rank()) = v[i];
  }
  return hermite_normal_form(extended).rank == rank();
}

IntegerLattice integer_kernel(const IntMatrix& a) {
  auto hnf = hermite_normal_form(a);
  const std::size_t n = a.cols();
  return IntegerLattice::spanned_by(hnf.U.columns(hnf.rank, n - hnf.rank));
}

IntegerLattice relation_lattice(const std::vector<BasisNumber>& omega) {
  if (omega.empty()) return IntegerLattice(0);
  return integer_kernel(coordinate_rows(omega));
}

IntegerLattice relation_lattice(const FrequencyVector& omega) { return relation_lattice(omega.entries()); }

Multiindex UnimodularSplitting::to_split(const Multiindex& xi) const {
  const std::size_t n = dimension();
  if (xi.size() != n) throw std::invalid_argument("to_split: dimension mismatch");
  Multiindex out(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += M(i, j) * xi[i];
    out[j] = static_cast<std::int64_t>(s);
  }
  return out;
}

Multiindex UnimodularSplitting::from_split(const Multiindex& alpha_beta) const {
  const std::size_t n = dimension();
  if (alpha_beta.size() != n) throw std::invalid_argument("from_split: dimension mismatch");
  Multiindex out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += M_inverse(j, i) * alpha_beta[j];
    out[i] = static_cast<std::int64_t>(s);
  }
  return out;
}

UnimodularSplitting split_frequencies(const FrequencyVector& omega) {
  if (omega.is_zero()) throw std::invalid_argument("split_frequencies: zero frequency vector");
  const std::size_t n = omega.dimension();

  UnimodularSplitting s;
  s.relations = relation_lattice(omega);

  // L = V cap Z^n where V annihilates the relation lattice; an integer kernel
  // is saturated, so Z^n / L is torsion-free.
  s.closure = integer_kernel(s.relations.basis().transposed());
  s.k = s.closure.rank();

  // Complete the basis of L: B^T U = [I 0] for saturated L, hence the first k
  // columns of M = U^{-T} are exactly B and M^{-1} = U^T.
  const IntMatrix& b = s.closure.basis();
  auto hnf = hermite_normal_form(b.transposed());
  if (hnf.rank != s.k || !(hnf.H.columns(0, s.k) == IntMatrix::identity(s.k)))
    throw InvariantViolation("orbit-closure lattice is not saturated");
  s.M_inverse = hnf.U.transposed();
  s.M = unimodular_inverse(s.M_inverse);
  if (!(s.M.columns(0, s.k) == b)) throw InvariantViolation("basis completion does not extend L");

  auto reduced = multiply(s.M_inverse, omega.entries());
  for (std::size_t i = s.k; i < n; ++i) {
    if (!reduced[i].is_zero())
      throw InvariantViolation("M^{-1} omega has a nonzero trailing coordinate");
  }
  s.omega_tilde.assign(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(s.k));
  return s;
}

std::optional<Multiindex> find_resonant_mode(const std::vector<BasisNumber>& omega_tilde,
                                             const BasisNumber& c, std::int64_t box) {
  if (box < 0) throw std::invalid_argument("find_resonant_mode: negative box");
  const std::size_t k = omega_tilde.size();
  const std::size_t m = c.basis_dimension();
  for (const auto& w : omega_tilde) {
    if (w.basis_dimension() != m) throw std::invalid_argument("find_resonant_mode: basis mismatch");
  }
  if (k == 0) {
    if (c.is_zero()) return Multiindex{};
    return std::nullopt;
  }

  // Augmented system sum_j alpha_j w_j[t] = -c[t], one row per basis coordinate.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t j = 0; j < k; ++j) a[t][j] = omega_tilde[j][t];
    a[t][k] = -c[t];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && rank < m; ++col) {
    std::size_t p = rank;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    Rational inv = 1 / a[rank][col];
    for (auto& v : a[rank]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m; ++i) {
    if (a[i][k] != 0) return std::nullopt;  // inconsistent
  }
  if (rank < k) {
    throw InvariantViolation(
        "find_resonant_mode: omega_tilde satisfies a rational relation, resonant mode is not unique");
  }
  Multiindex alpha(k, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    const Rational& q = a[r][k];
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    Integer v = boost::multiprecision::numerator(q);
    if (v > box || v < -box) return std::nullopt;
    alpha[pivot_col[r]] = static_cast<std::int64_t>(v);
  }
  return alpha;
}

}  // namespace quasilab
