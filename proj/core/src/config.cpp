#include "quasilab/config.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

namespace quasilab {

namespace {

std::string summarize(const std::vector<ConfigIssue>& issues) {
  std::string text = "invalid config:";
  for (const auto& issue : issues) text += "\n  " + (issue.path.empty() ? "<root>" : issue.path) + ": " + issue.message;
  return text;
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

class Parser {
 public:
  std::vector<ConfigIssue> issues;

  void fail(std::string path, std::string message) { issues.push_back({std::move(path), std::move(message)}); }

  bool object(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
      fail(path, "expected an object");
      return false;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
        fail(join(path, it.key()), "unknown key \"" + it.key() + "\"");
    return true;
  }

  std::optional<std::int64_t> integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) {
      fail(path, "expected an integer");
      return std::nullopt;
    }
    return j.get<std::int64_t>();
  }

  std::optional<double> number(const Json& j, const std::string& path) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
      try {
        const Rational q = parse_rational(j.get<std::string>());
        return static_cast<double>(q);
      } catch (const std::exception&) {
      }
    }
    fail(path, "expected a number or a \"p/q\" string");
    return std::nullopt;
  }

  std::optional<bool> boolean(const Json& j, const std::string& path) {
    if (!j.is_boolean()) {
      fail(path, "expected true or false");
      return std::nullopt;
    }
    return j.get<bool>();
  }

  std::optional<Rational> rational(const Json& j, const std::string& path) {
    try {
      return rational_from_json(j);
    } catch (const std::exception& e) {
      fail(path, e.what());
      return std::nullopt;
    }
  }

  std::optional<std::vector<double>> vector(const Json& j, const std::string& path, std::size_t length) {
    if (!j.is_array() || j.size() != length) {
      fail(path, "expected an array of " + std::to_string(length) + " numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = number(j[i], at(path, i));
      if (!v) return std::nullopt;
      out.push_back(*v);
    }
    return out;
  }

  std::optional<TrigPolynomial> polynomial(const Json& j, const std::string& path, std::size_t dim) {
    try {
      return trig_polynomial_from_json(j, dim);
    } catch (const std::exception& e) {
      fail(path, e.what());
      return std::nullopt;
    }
  }

  std::optional<BasisNumber> basis_number(const Json& j, const std::string& path, std::size_t m) {
    if (j.is_array()) {
      if (j.size() != m) {
        fail(path, "expected " + std::to_string(m) + " coordinates over the basis");
        return std::nullopt;
      }
      std::vector<Rational> coeffs;
      for (std::size_t t = 0; t < m; ++t) {
        auto q = rational(j[t], at(path, t));
        if (!q) return std::nullopt;
        coeffs.push_back(*q);
      }
      return BasisNumber(std::move(coeffs));
    }
    auto q = rational(j, path);
    if (!q) return std::nullopt;
    return BasisNumber::rational(*q, m);
  }
};

Json rational_list(const std::vector<Rational>& qs) {
  Json arr = Json::array();
  for (const auto& q : qs) arr.push_back(to_json(q));
  return arr;
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues)) {}

LabConfig parse_config(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError({{"", std::string("not valid JSON: ") + e.what()}});
  }
  Parser p;
  LabConfig cfg;
  if (!p.object(root, "",
                {"dimension", "basis", "omega", "hessian", "c", "r", "factory", "remainder", "ladder", "truncation",
                 "grid", "thresholds", "checks", "unique_continuation_box", "maslov", "seed", "output"}))
    throw ConfigError(p.issues);

  // dimension
  if (!root.contains("dimension")) {
    p.fail("dimension", "required");
  } else if (auto n = p.integer(root["dimension"], "dimension")) {
    if (*n < 1 || *n > 16) p.fail("dimension", "must be between 1 and 16");
    else cfg.dimension = static_cast<std::size_t>(*n);
  }
  const std::size_t n = cfg.dimension;

  // basis
  if (root.contains("basis")) {
    const Json& b = root["basis"];
    if (!b.is_array() || b.empty()) {
      p.fail("basis", "expected a nonempty array of {name, value}");
    } else {
      std::vector<std::string> names;
      std::vector<double> values;
      bool ok = true;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::string path = at("basis", i);
        if (!p.object(b[i], path, {"name", "value"})) {
          ok = false;
          continue;
        }
        if (!b[i].contains("name") || !b[i]["name"].is_string()) {
          p.fail(join(path, "name"), "expected a string");
          ok = false;
        } else {
          names.push_back(b[i]["name"].get<std::string>());
        }
        if (!b[i].contains("value")) {
          p.fail(join(path, "value"), "required");
          ok = false;
        } else if (auto v = p.number(b[i]["value"], join(path, "value"))) {
          values.push_back(*v);
        } else {
          ok = false;
        }
      }
      if (ok) {
        try {
          cfg.basis = IrrationalityBasis(names, values);
        } catch (const std::exception& e) {
          p.fail("basis", e.what());
        }
      }
    }
  }
  const std::size_t m = cfg.basis.dimension();

  // omega
  bool omega_ok = false;
  if (!root.contains("omega")) {
    p.fail("omega", "required");
  } else if (!root["omega"].is_array()) {
    p.fail("omega", "expected an array");
  } else {
    const Json& o = root["omega"];
    std::vector<BasisNumber> entries;
    bool ok = true;
    for (std::size_t i = 0; i < o.size(); ++i) {
      auto b = p.basis_number(o[i], at("omega", i), m);
      if (b) entries.push_back(*b);
      else ok = false;
    }
    if (ok && n > 0 && entries.size() != n) {
      p.fail("omega", "has length " + std::to_string(entries.size()) + " but dimension is " + std::to_string(n));
    } else if (ok && n > 0) {
      cfg.omega = FrequencyVector(std::move(entries));
      if (cfg.omega.is_zero()) p.fail("omega", "must not be the zero vector");
      else omega_ok = true;
    }
  }

  // hessian
  if (!root.contains("hessian")) {
    p.fail("hessian", "required");
  } else if (n > 0) {
    const Json& h = root["hessian"];
    const std::size_t expected = omega_ok ? cfg.omega.dimension() : n;
    if (!h.is_array() || h.size() != expected ||
        !std::all_of(h.begin(), h.end(), [&](const Json& row) { return row.is_array() && row.size() == expected; })) {
      p.fail("hessian", "expected a " + std::to_string(expected) + "x" + std::to_string(expected) + " matrix");
    } else {
      Eigen::MatrixXd mat(static_cast<Eigen::Index>(expected), static_cast<Eigen::Index>(expected));
      bool ok = true;
      for (std::size_t i = 0; i < expected; ++i)
        for (std::size_t j = 0; j < expected; ++j) {
          auto v = p.number(h[i][j], at(at("hessian", i), j));
          if (v) mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *v;
          else ok = false;
        }
      if (ok) {
        try {
          cfg.hessian = HessianForm(mat);
        } catch (const std::exception& e) {
          p.fail("hessian", e.what());
        }
      }
    }
  }

  // c
  if (root.contains("c")) {
    const Json& c = root["c"];
    if (!(c.is_string() && c.get<std::string>() == "resonant")) cfg.c = p.basis_number(c, "c", m);
  }

  std::optional<UnimodularSplitting> split;
  if (omega_ok) split = split_frequencies(cfg.omega);
  const std::size_t k = split ? split->k : 0;
  const std::size_t d = split ? split->complement_dimension() : 0;

  // r and factory
  if (root.contains("r") && root.contains("factory")) p.fail("factory", "conflicts with r: give one or the other");
  if (root.contains("r") && n > 0) {
    cfg.r = p.polynomial(root["r"], "r", n);
    if (cfg.r && !cfg.r->is_real()) p.fail("r", "r must be real-valued (c(-alpha) = conj c(alpha))");
  }
  if (root.contains("factory") && p.object(root["factory"], "factory", {"alpha0", "v"})) {
    const Json& f = root["factory"];
    FactoryConfig fc;
    bool ok = split.has_value();
    if (!f.contains("alpha0")) {
      p.fail("factory.alpha0", "required");
      ok = false;
    } else if (!f["alpha0"].is_array()) {
      p.fail("factory.alpha0", "expected an integer array");
      ok = false;
    } else {
      for (std::size_t i = 0; i < f["alpha0"].size(); ++i) {
        auto a = p.integer(f["alpha0"][i], at("factory.alpha0", i));
        if (a) fc.alpha0.push_back(*a);
        else ok = false;
      }
      if (split && ok && fc.alpha0.size() != k) {
        p.fail("factory.alpha0", "has length " + std::to_string(fc.alpha0.size()) +
                                     " but the orbit closure has dimension k = " + std::to_string(k));
        ok = false;
      }
    }
    if (!f.contains("v")) {
      p.fail("factory.v", "required");
      ok = false;
    } else if (split) {
      auto v = p.polynomial(f["v"], "factory.v", d);
      if (!v) {
        ok = false;
      } else if (v->empty()) {
        p.fail("factory.v", "v must not vanish identically");
        ok = false;
      } else if (!v->is_real()) {
        p.fail("factory.v", "v must be real-valued (c(-beta) = conj c(beta))");
        ok = false;
      } else {
        fc.v = *v;
      }
    }
    if (ok) cfg.factory = fc;
  }

  // remainder
  if (root.contains("remainder") &&
      p.object(root["remainder"], "remainder", {"enabled", "multiplier_scale", "potential"})) {
    const Json& r = root["remainder"];
    cfg.remainder.potential = TrigPolynomial(std::max<std::size_t>(n, 1));
    if (r.contains("enabled"))
      if (auto b = p.boolean(r["enabled"], "remainder.enabled")) cfg.remainder.enabled = *b;
    if (r.contains("multiplier_scale"))
      if (auto v = p.number(r["multiplier_scale"], "remainder.multiplier_scale")) cfg.remainder.multiplier_scale = *v;
    if (r.contains("potential") && n > 0) {
      auto pot = p.polynomial(r["potential"], "remainder.potential", n);
      if (pot && !pot->is_real()) p.fail("remainder.potential", "potential must be real-valued");
      else if (pot) cfg.remainder.potential = *pot;
    }
  }
  if (cfg.remainder.potential.dimension() != n && n > 0) cfg.remainder.potential = TrigPolynomial(n);

  // ladder
  if (root.contains("ladder") && p.object(root["ladder"], "ladder", {"j_min", "j_max"})) {
    const Json& l = root["ladder"];
    if (l.contains("j_min"))
      if (auto v = p.integer(l["j_min"], "ladder.j_min")) cfg.j_min = static_cast<int>(*v);
    if (l.contains("j_max"))
      if (auto v = p.integer(l["j_max"], "ladder.j_max")) cfg.j_max = static_cast<int>(*v);
  }
  if (cfg.j_min < 0 || cfg.j_max > 40 || cfg.j_max - cfg.j_min < 3)
    p.fail("ladder", "need 0 <= j_min, j_max <= 40 and at least 4 ladder points");

  if (root.contains("truncation"))
    if (auto v = p.integer(root["truncation"], "truncation")) {
      if (*v < 4 || *v > 512) p.fail("truncation", "must be between 4 and 512");
      else cfg.truncation = static_cast<int>(*v);
    }

  // grid
  cfg.xi_points.clear();
  bool xi_given = false;
  if (root.contains("grid") && p.object(root["grid"], "grid", {"x_points", "xi"})) {
    const Json& g = root["grid"];
    if (g.contains("x_points"))
      if (auto v = p.integer(g["x_points"], "grid.x_points")) {
        if (*v < 2 || *v > 4096) p.fail("grid.x_points", "must be between 2 and 4096");
        else cfg.x_points = static_cast<std::size_t>(*v);
      }
    if (g.contains("xi") && n > 0) {
      xi_given = true;
      if (!g["xi"].is_array()) {
        p.fail("grid.xi", "expected an array of covectors");
      } else {
        for (std::size_t i = 0; i < g["xi"].size(); ++i)
          if (auto xi = p.vector(g["xi"][i], at("grid.xi", i), n)) cfg.xi_points.push_back(*xi);
        const bool has_zero = std::any_of(cfg.xi_points.begin(), cfg.xi_points.end(), [](const auto& xi) {
          return std::all_of(xi.begin(), xi.end(), [](double v) { return v == 0.0; });
        });
        if (!has_zero) p.fail("grid.xi", "must contain the zero covector");
      }
    }
  }
  if (!xi_given && n > 0) {
    cfg.xi_points.emplace_back(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (double sign : {1.0, -1.0}) {
        std::vector<double> xi(n, 0.0);
        xi[i] = sign;
        cfg.xi_points.push_back(xi);
      }
  }

  // thresholds
  if (root.contains("thresholds") &&
      p.object(root["thresholds"], "thresholds",
               {"delta", "epsilon", "null_tol", "fill_fraction", "in_exponent", "out_exponent"})) {
    const Json& t = root["thresholds"];
    auto read = [&](const char* key, double& target) {
      if (t.contains(key))
        if (auto v = p.number(t[key], join("thresholds", key))) target = *v;
    };
    read("delta", cfg.thresholds.delta);
    read("epsilon", cfg.thresholds.epsilon);
    read("null_tol", cfg.thresholds.null_tol);
    read("fill_fraction", cfg.thresholds.fill_fraction);
    read("in_exponent", cfg.thresholds.in_exponent);
    read("out_exponent", cfg.thresholds.out_exponent);
  }
  const auto& th = cfg.thresholds;
  if (!(th.delta > 0.0)) p.fail("thresholds.delta", "must be positive");
  if (!(th.epsilon > 0.0 && th.epsilon < 1.0)) p.fail("thresholds.epsilon", "must lie in (0, 1)");
  if (!(th.null_tol > 0.0 && th.null_tol < 1.0)) p.fail("thresholds.null_tol", "must lie in (0, 1)");
  if (!(th.fill_fraction > 0.0 && th.fill_fraction <= 1.0)) p.fail("thresholds.fill_fraction", "must lie in (0, 1]");
  if (!(th.in_exponent < th.out_exponent)) p.fail("thresholds.in_exponent", "must be below out_exponent");

  // checks
  if (root.contains("checks") &&
      p.object(root["checks"], "checks", {"require_nondegenerate", "require_quasiconvex"})) {
    const Json& c = root["checks"];
    if (c.contains("require_nondegenerate"))
      if (auto b = p.boolean(c["require_nondegenerate"], "checks.require_nondegenerate")) cfg.require_nondegenerate = *b;
    if (c.contains("require_quasiconvex"))
      if (auto b = p.boolean(c["require_quasiconvex"], "checks.require_quasiconvex")) cfg.require_quasiconvex = *b;
  }

  // unique continuation box, in T' coordinates
  cfg.unique_continuation_box = Box{std::vector<double>(d, 0.0), std::vector<double>(d, 0.25)};
  if (root.contains("unique_continuation_box") &&
      p.object(root["unique_continuation_box"], "unique_continuation_box", {"lower", "upper"}) && split) {
    const Json& b = root["unique_continuation_box"];
    if (b.contains("lower"))
      if (auto v = p.vector(b["lower"], "unique_continuation_box.lower", d)) cfg.unique_continuation_box.lower = *v;
    if (b.contains("upper"))
      if (auto v = p.vector(b["upper"], "unique_continuation_box.upper", d)) cfg.unique_continuation_box.upper = *v;
    for (std::size_t i = 0; i < d; ++i) {
      const double w = cfg.unique_continuation_box.upper[i] - cfg.unique_continuation_box.lower[i];
      if (!(w > 0.0 && w <= 1.0))
        p.fail("unique_continuation_box", "each side must have length in (0, 1]");
    }
  }

  // maslov
  if (root.contains("maslov") && p.object(root["maslov"], "maslov", {"liouville_over_2pi", "maslov", "h"})) {
    const Json& mj = root["maslov"];
    MaslovConfig mc;
    bool ok = true;
    if (!mj.contains("liouville_over_2pi") || !mj["liouville_over_2pi"].is_array()) {
      p.fail("maslov.liouville_over_2pi", "expected an array of rationals");
      ok = false;
    } else {
      for (std::size_t i = 0; i < mj["liouville_over_2pi"].size(); ++i) {
        auto q = p.rational(mj["liouville_over_2pi"][i], at("maslov.liouville_over_2pi", i));
        if (q) mc.liouville_over_2pi.push_back(*q);
        else ok = false;
      }
    }
    if (!mj.contains("maslov") || !mj["maslov"].is_array()) {
      p.fail("maslov.maslov", "expected an integer array");
      ok = false;
    } else {
      for (std::size_t i = 0; i < mj["maslov"].size(); ++i) {
        auto a = p.integer(mj["maslov"][i], at("maslov.maslov", i));
        if (a) mc.maslov.emplace_back(*a);
        else ok = false;
      }
    }
    if (ok && mc.maslov.size() != mc.liouville_over_2pi.size()) {
      p.fail("maslov", "liouville_over_2pi and maslov must have equal length");
      ok = false;
    }
    if (!mj.contains("h")) {
      p.fail("maslov.h", "required");
      ok = false;
    } else if (auto h = p.rational(mj["h"], "maslov.h")) {
      if (*h <= 0) {
        p.fail("maslov.h", "must be positive");
        ok = false;
      }
      mc.h = *h;
    } else {
      ok = false;
    }
    if (ok) cfg.maslov = mc;
  }

  if (root.contains("seed"))
    if (auto s = p.integer(root["seed"], "seed")) {
      if (*s < 0) p.fail("seed", "must be nonnegative");
      else cfg.seed = static_cast<std::uint64_t>(*s);
    }
  if (root.contains("output")) {
    if (!root["output"].is_string() || root["output"].get<std::string>().empty()) p.fail("output", "expected a path");
    else cfg.output = root["output"].get<std::string>();
  }

  if (!p.issues.empty()) throw ConfigError(p.issues);
  return cfg;
}

Json echo_config(const LabConfig& cfg) {
  Json out;
  out["dimension"] = cfg.dimension;
  Json basis = Json::array();
  for (std::size_t t = 0; t < cfg.basis.dimension(); ++t)
    basis.push_back(Json{{"name", cfg.basis.names()[t]}, {"value", cfg.basis.values()[t]}});
  out["basis"] = basis;
  Json omega = Json::array();
  for (const auto& w : cfg.omega.entries()) omega.push_back(to_json(w));
  out["omega"] = omega;
  Json hessian = Json::array();
  const auto& h = cfg.hessian.matrix();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < h.cols(); ++j) row.push_back(h(i, j));
    hessian.push_back(row);
  }
  out["hessian"] = hessian;
  out["c"] = cfg.c ? to_json(*cfg.c) : Json("resonant");
  if (cfg.r) out["r"] = to_json(*cfg.r);
  if (cfg.factory) out["factory"] = Json{{"alpha0", to_json(cfg.factory->alpha0)}, {"v", to_json(cfg.factory->v)}};
  out["remainder"] = Json{{"enabled", cfg.remainder.enabled},
                          {"multiplier_scale", cfg.remainder.multiplier_scale},
                          {"potential", to_json(cfg.remainder.potential)}};
  out["ladder"] = Json{{"j_min", cfg.j_min}, {"j_max", cfg.j_max}};
  out["truncation"] = cfg.truncation;
  out["grid"] = Json{{"x_points", cfg.x_points}, {"xi", cfg.xi_points}};
  out["thresholds"] = Json{{"delta", cfg.thresholds.delta},
                           {"epsilon", cfg.thresholds.epsilon},
                           {"null_tol", cfg.thresholds.null_tol},
                           {"fill_fraction", cfg.thresholds.fill_fraction},
                           {"in_exponent", cfg.thresholds.in_exponent},
                           {"out_exponent", cfg.thresholds.out_exponent}};
  out["checks"] = Json{{"require_nondegenerate", cfg.require_nondegenerate},
                       {"require_quasiconvex", cfg.require_quasiconvex}};
  out["unique_continuation_box"] =
      Json{{"lower", cfg.unique_continuation_box.lower}, {"upper", cfg.unique_continuation_box.upper}};
  if (cfg.maslov) {
    Json classes = Json::array();
    for (const auto& a : cfg.maslov->maslov) classes.push_back(static_cast<std::int64_t>(a));
    out["maslov"] = Json{{"liouville_over_2pi", rational_list(cfg.maslov->liouville_over_2pi)},
                         {"maslov", classes},
                         {"h", to_json(cfg.maslov->h)}};
  }
  out["seed"] = cfg.seed;
  out["output"] = cfg.output;
  return out;
}

}  // namespace quasilab
