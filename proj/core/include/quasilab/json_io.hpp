#pragma once

#include "quasilab/basis_number.hpp"
#include "quasilab/decay_fit.hpp"
#include "quasilab/int_matrix.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace quasilab {

using Json = nlohmann::json;

/// Deterministic text form: object keys sorted, floats printed with %.17g,
/// non-finite floats written as the strings "inf", "-inf" and "nan".
std::string canonical_dump(const Json& value, int indent = 2);

/// %.17g, the float format used in every emitted artifact.
std::string format_double(double value);

Json to_json(const Rational& q);
Json to_json(const BasisNumber& b);
Json to_json(const IntMatrix& m);
Json to_json(const Multiindex& alpha);
Json to_json(const DecayFit& fit);

/// [{"alpha": [...], "re": x, "im": y}, ...] in ascending multiindex order.
Json to_json(const TrigPolynomial& p);
/// Inverse of to_json; throws std::invalid_argument with a description.
TrigPolynomial trig_polynomial_from_json(const Json& j, std::size_t dimension);

/// Integer or "p/q" string. Throws std::invalid_argument otherwise.
Rational rational_from_json(const Json& j);

}  // namespace quasilab
