#include "quasilab/maslov.hpp"

#include <stdexcept>

namespace quasilab {

bool maslov_admissible(const std::vector<Rational>& liouville_over_2pi, const std::vector<Integer>& maslov,
                       const Rational& h) {
  if (h <= 0) throw std::invalid_argument("maslov_admissible: h must be positive");
  if (liouville_over_2pi.size() != maslov.size())
    throw std::invalid_argument("maslov_admissible: Liouville and Maslov classes differ in length");
  for (std::size_t i = 0; i < maslov.size(); ++i) {
    const Rational defect = liouville_over_2pi[i] / h - Rational(maslov[i], 4);
    if (boost::multiprecision::denominator(defect) != 1) return false;
  }
  return true;
}

}  // namespace quasilab
