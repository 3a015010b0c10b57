#include "quasilab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace quasilab {

namespace {

void write_string(std::string& out, const std::string& s) {
  out += Json(s).dump();
}

void write(std::string& out, const Json& v, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // std::map storage: keys already sorted
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write_string(out, it.key());
        out += indent < 0 ? ":" : ": ";
        write(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        newline(depth + 1);
        write(out, v[i], indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) out += format_double(d);
      else write_string(out, std::isnan(d) ? "nan" : (d > 0 ? "inf" : "-inf"));
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string canonical_dump(const Json& value, int indent) {
  std::string out;
  write(out, value, indent, 0);
  out += '\n';
  return out;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const BasisNumber& b) {
  Json arr = Json::array();
  for (const auto& q : b.coeffs()) arr.push_back(to_json(q));
  return arr;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& x = m(i, j);
      if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        row.push_back(static_cast<std::int64_t>(x));
      else
        row.push_back(x.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Multiindex& alpha) {
  Json arr = Json::array();
  for (auto a : alpha) arr.push_back(a);
  return arr;
}

Json to_json(const DecayFit& fit) {
  return Json{{"exponent", fit.exponent},
              {"residual", fit.residual},
              {"reliable", fit.reliable},
              {"superpolynomial", fit.superpolynomial}};
}

Json to_json(const TrigPolynomial& p) {
  Json arr = Json::array();
  for (const auto& [alpha, c] : p) arr.push_back(Json{{"alpha", to_json(alpha)}, {"re", c.real()}, {"im", c.imag()}});
  return arr;
}

TrigPolynomial trig_polynomial_from_json(const Json& j, std::size_t dimension) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of {alpha, re, im} terms");
  TrigPolynomial p(dimension);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& term = j[i];
    const std::string where = "term " + std::to_string(i) + ": ";
    if (!term.is_object()) throw std::invalid_argument(where + "expected an object");
    for (auto it = term.begin(); it != term.end(); ++it)
      if (it.key() != "alpha" && it.key() != "re" && it.key() != "im")
        throw std::invalid_argument(where + "unknown key \"" + it.key() + "\"");
    if (!term.contains("alpha") || !term["alpha"].is_array())
      throw std::invalid_argument(where + "alpha must be an integer array");
    Multiindex alpha;
    for (const auto& a : term["alpha"]) {
      if (!a.is_number_integer()) throw std::invalid_argument(where + "alpha must be an integer array");
      alpha.push_back(a.get<std::int64_t>());
    }
    if (alpha.size() != dimension)
      throw std::invalid_argument(where + "alpha has length " + std::to_string(alpha.size()) + ", expected " +
                                  std::to_string(dimension));
    double re = 0.0, im = 0.0;
    if (term.contains("re")) {
      if (!term["re"].is_number()) throw std::invalid_argument(where + "re must be a number");
      re = term["re"].get<double>();
    }
    if (term.contains("im")) {
      if (!term["im"].is_number()) throw std::invalid_argument(where + "im must be a number");
      im = term["im"].get<double>();
    }
    if (p.coefficient(alpha) != Complex{}) throw std::invalid_argument(where + "duplicate alpha");
    p.set(alpha, Complex(re, im));
  }
  return p;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

}  // namespace quasilab
