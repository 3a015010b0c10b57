#include "quasilab/config.hpp"

#include "cli_support.hpp"

#include <gtest/gtest.h>

using namespace quasilab;
using namespace quasilab::testing;

namespace {

std::vector<ConfigIssue> issues_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.issues();
  }
  return {};
}

bool has_issue_at(const std::vector<ConfigIssue>& issues, const std::string& path) {
  for (const auto& i : issues)
    if (i.path == path) return true;
  return false;
}

Json golden() { return Json::parse(golden_config_text()); }

}  // namespace

TEST(Config, GoldenParsesWithDefaults) {
  const auto cfg = parse_config(golden_config_text());
  EXPECT_EQ(cfg.dimension, 2u);
  EXPECT_EQ(cfg.omega, rational_frequencies({2, 3}));
  EXPECT_FALSE(cfg.c.has_value());
  ASSERT_TRUE(cfg.factory.has_value());
  EXPECT_EQ(cfg.factory->alpha0, Multiindex{0});
  EXPECT_EQ(cfg.factory->v.size(), 3u);
  EXPECT_EQ(cfg.j_min, 4);
  EXPECT_EQ(cfg.j_max, 12);
  EXPECT_EQ(cfg.truncation, 16);
  EXPECT_EQ(cfg.x_points, 32u);
  EXPECT_EQ(cfg.xi_points.size(), 5u);
  EXPECT_DOUBLE_EQ(cfg.thresholds.null_tol, 1e-8);
  EXPECT_DOUBLE_EQ(cfg.unique_continuation_box.upper.at(0), 0.25);
  EXPECT_FALSE(cfg.remainder.enabled);
}

TEST(Config, EchoRoundTrips) {
  const auto cfg = parse_config(golden_config_text());
  const auto echo = echo_config(cfg);
  const auto again = parse_config(echo.dump());
  EXPECT_EQ(echo_config(again), echo);
}

TEST(Config, UnknownKeyIsReportedWithPath) {
  auto j = golden();
  j["foo"] = 1;
  j["factory"]["bar"] = true;
  const auto issues = issues_of(j.dump());
  EXPECT_TRUE(has_issue_at(issues, "foo"));
  EXPECT_TRUE(has_issue_at(issues, "factory.bar"));
}

TEST(Config, AllIssuesAreCollected) {
  auto j = golden();
  j["hessian"] = Json::array({Json::array({1, 0, 0}), Json::array({0, 1, 0})});
  j["truncation"] = 2;
  const auto issues = issues_of(j.dump());
  EXPECT_TRUE(has_issue_at(issues, "hessian"));
  EXPECT_TRUE(has_issue_at(issues, "truncation"));
}

TEST(Config, NonRealInputsAreRejected) {
  auto j = golden();
  j.erase("factory");
  j["r"] = Json::array({Json{{"alpha", {1, 0}}, {"re", 1.0}}});
  EXPECT_FALSE(issues_of(j.dump()).empty());

  auto k = golden();
  k["factory"]["v"][0]["im"] = 0.3;
  EXPECT_FALSE(issues_of(k.dump()).empty());
}

TEST(Config, FactoryShapesFollowTheSplitting) {
  auto j = golden();
  j["factory"]["alpha0"] = {0, 0};
  EXPECT_FALSE(issues_of(j.dump()).empty());
  auto k = golden();
  k["factory"]["v"][0]["alpha"] = {1, 1};
  EXPECT_FALSE(issues_of(k.dump()).empty());
}

TEST(Config, RealMultiplierAndFactoryAreExclusive) {
  auto j = golden();
  j["r"] = Json::array({Json{{"alpha", {1, 0}}, {"re", 0.5}}, Json{{"alpha", {-1, 0}}, {"re", 0.5}}});
  EXPECT_TRUE(has_issue_at(issues_of(j.dump()), "factory"));
}

TEST(Config, LadderAndGridLimits) {
  auto j = golden();
  j["ladder"] = {{"j_min", 4}, {"j_max", 6}};
  EXPECT_FALSE(issues_of(j.dump()).empty());
  auto k = golden();
  k["grid"] = {{"x_points", 16}, {"xi", {{1, 0}}}};
  EXPECT_FALSE(issues_of(k.dump()).empty());
}

TEST(Config, MalformedJsonIsAConfigError) {
  EXPECT_THROW(parse_config("{ not json"), ConfigError);
  EXPECT_THROW(parse_config("[]"), ConfigError);
}

TEST(Config, IrrationalFrequencies) {
  const std::string text = R"({
    "dimension": 2,
    "basis": [{"name": "1", "value": 1}, {"name": "sqrt2", "value": 1.4142135623730951}],
    "omega": [["1", "0"], ["0", "1"]],
    "hessian": [[1, 0], [0, 1]],
    "c": ["0", "0"],
    "r": []
  })";
  const auto cfg = parse_config(text);
  EXPECT_EQ(cfg.basis.dimension(), 2u);
  ASSERT_TRUE(cfg.c.has_value());
  EXPECT_TRUE(cfg.c->is_zero());
}
