#pragma once

#include "quasilab/basis_number.hpp"

#include <vector>

namespace quasilab {

/// Quantization condition on the cycles of H_1(T): for every i,
///   lambda_i / (2 pi h) - maslov_i / 4  is an integer.
/// The Liouville class is passed as exact multiples of 2 pi, so the test is exact.
/// Throws std::invalid_argument if h <= 0 or the vectors differ in length.
bool maslov_admissible(const std::vector<Rational>& liouville_over_2pi, const std::vector<Integer>& maslov,
                       const Rational& h);

}  // namespace quasilab
