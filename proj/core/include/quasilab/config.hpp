#pragma once

#include "quasilab/basis_number.hpp"
#include "quasilab/galerkin.hpp"
#include "quasilab/json_io.hpp"
#include "quasilab/lattice.hpp"
#include "quasilab/nondegeneracy.hpp"
#include "quasilab/trig_polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasilab {

struct ConfigIssue {
  std::string path;  ///< dotted location, e.g. "hessian" or "factory.v[2].alpha"
  std::string message;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

struct FactoryConfig {
  Multiindex alpha0;
  TrigPolynomial v{1};  ///< on T', dimension n - k
};

struct RemainderConfig {
  bool enabled = false;
  double multiplier_scale = 1.0;
  TrigPolynomial potential{1};
};

struct ThresholdConfig {
  double delta = 1.0;
  double epsilon = 0.05;
  double null_tol = kDefaultNullTol;
  double fill_fraction = 0.95;
  double in_exponent = 0.5;
  double out_exponent = 2.0;
};

struct MaslovConfig {
  std::vector<Rational> liouville_over_2pi;
  std::vector<Integer> maslov;
  Rational h;
};

struct LabConfig {
  std::size_t dimension = 0;
  IrrationalityBasis basis;
  FrequencyVector omega;
  HessianForm hessian{Eigen::MatrixXd::Identity(1, 1)};
  std::optional<BasisNumber> c;  ///< empty: "resonant", back-solved from the factory
  std::optional<TrigPolynomial> r;
  std::optional<FactoryConfig> factory;
  RemainderConfig remainder;
  int j_min = 4;
  int j_max = 12;
  int truncation = 16;
  std::size_t x_points = 32;
  std::vector<std::vector<double>> xi_points;
  ThresholdConfig thresholds;
  bool require_nondegenerate = true;
  bool require_quasiconvex = true;
  Box unique_continuation_box;
  std::optional<MaslovConfig> maslov;
  std::uint64_t seed = 0;
  std::string output = "out";
};

/// Parses and validates a JSON config. Unknown keys are rejected and every
/// problem found is reported, each with its path. Throws ConfigError.
LabConfig parse_config(const std::string& text);

/// The config with every default materialized, in the input schema.
Json echo_config(const LabConfig& config);

}  // namespace quasilab
