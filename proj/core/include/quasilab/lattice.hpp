#pragma once

#include "quasilab/basis_number.hpp"
#include "quasilab/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quasilab {

using Multiindex = std::vector<std::int64_t>;

/// Raised when an internal consistency condition that the inputs were supposed
/// to guarantee turns out to be false (e.g. a "relation-free" frequency vector
/// admitting two resonant modes).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A sublattice of Z^n, stored canonically as the nonzero columns of its
/// column Hermite normal form, so two lattices are equal iff their bases are.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim);  // the zero lattice
  /// Lattice spanned by the columns of `generators` (any integer matrix).
  static IntegerLattice spanned_by(const IntMatrix& generators);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const Multiindex& v) const;
  bool in_rational_span(const Multiindex& v) const;

  bool operator==(const IntegerLattice&) const = default;

 private:
  IntegerLattice(std::size_t ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  IntMatrix basis_;
};

/// Integer kernel {x in Z^n : A x = 0} as a lattice.
IntegerLattice integer_kernel(const IntMatrix& a);

/// {alpha in Z^n : alpha . omega = 0}, computed exactly from the rational
/// coordinate rows of omega.
IntegerLattice relation_lattice(const FrequencyVector& omega);
IntegerLattice relation_lattice(const std::vector<BasisNumber>& omega);

/// Change of basis x = M (y, z) splitting the torus into the orbit closure T
/// (the y directions, dimension k) and a complementary torus T'.
struct UnimodularSplitting {
  IntMatrix M;
  IntMatrix M_inverse;
  std::size_t k = 0;
  std::vector<BasisNumber> omega_tilde;  ///< first k entries of M^{-1} omega
  IntegerLattice relations{1};           ///< relation lattice of omega
  IntegerLattice closure{1};             ///< L = V cap Z^n, basis = first k columns of M

  std::size_t dimension() const { return M.rows(); }
  std::size_t complement_dimension() const { return M.rows() - k; }

  /// Frequency xi of a character on the x torus -> (alpha, beta) = M^T xi.
  Multiindex to_split(const Multiindex& xi) const;
  /// (alpha, beta) -> xi = M^{-T} (alpha, beta).
  Multiindex from_split(const Multiindex& alpha_beta) const;
};

UnimodularSplitting split_frequencies(const FrequencyVector& omega);

inline constexpr std::int64_t kDefaultResonanceBox = 10000;

/// The unique alpha0 with |alpha0|_inf <= box and omega_tilde . alpha0 + c == 0,
/// solved coordinatewise in the irrationality basis.
std::optional<Multiindex> find_resonant_mode(const std::vector<BasisNumber>& omega_tilde,
                                             const BasisNumber& c,
                                             std::int64_t box = kDefaultResonanceBox);

}  // namespace quasilab
