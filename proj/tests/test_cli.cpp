#include "cli_support.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace quasilab::testing;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QUASILAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

fs::path golden_path() { return fs::path(QUASILAB_TEST_DATA) / "golden.json"; }

fs::path config_with(const fs::path& dir, const nlohmann::json& patch) {
  auto j = nlohmann::json::parse(golden_config_text());
  j.merge_patch(patch);
  const auto p = dir / "config.json";
  write_file(p, j.dump());
  return p;
}

}  // namespace

TEST(Cli, AllOnGoldenPasses) {
  const auto out = scratch_dir();
  EXPECT_EQ(run_cli("all --config " + quoted(golden_path()) + " --out " + quoted(out / "run")), 0);
  for (const char* f : {"report.json", "massmap.csv", "decay.csv", "config.echo"})
    EXPECT_TRUE(fs::exists(out / "run" / f)) << f;
  const auto report = nlohmann::json::parse(read_file(out / "run" / "report.json"));
  EXPECT_EQ(report.at("status"), "pass");
}

TEST(Cli, EachSubcommandRuns) {
  const auto out = scratch_dir();
  for (const char* cmd : {"check-hypotheses", "split", "build-quasimode", "verify", "wavefront"})
    EXPECT_EQ(run_cli(std::string(cmd) + " --config " + quoted(golden_path()) + " --out " + quoted(out / cmd)), 0)
        << cmd;
}

TEST(Cli, LadderAndSeedFlags) {
  const auto out = scratch_dir();
  EXPECT_EQ(run_cli("verify --config " + quoted(golden_path()) + " --ladder 5..9 --seed 7 --out " + quoted(out)), 0);
  const auto echo = nlohmann::json::parse(read_file(out / "config.echo"));
  EXPECT_EQ(echo.at("ladder").at("j_min"), 5);
  EXPECT_EQ(echo.at("seed"), 7);
  EXPECT_EQ(run_cli("verify --config " + quoted(golden_path()) + " --ladder 5..6 --out " + quoted(out)), 1);
  EXPECT_EQ(run_cli("verify --config " + quoted(golden_path()) + " --ladder five --out " + quoted(out)), 1);
}

TEST(Cli, FailedHypothesisExitsTwo) {
  const auto dir = scratch_dir();
  const auto cfg = config_with(dir, {{"omega", {3, 2}}, {"hessian", {{1, 0}, {0, -1}}}});
  EXPECT_EQ(run_cli("check-hypotheses --config " + quoted(cfg) + " --out " + quoted(dir / "out")), 2);
  const auto report = nlohmann::json::parse(read_file(dir / "out" / "report.json"));
  bool named_f = false;
  for (const auto& f : report.at("failures")) named_f = named_f || f.at("hypothesis") == "F";
  EXPECT_TRUE(named_f);
}

TEST(Cli, UsageErrorsExitOne) {
  const auto dir = scratch_dir();
  EXPECT_EQ(run_cli(""), 1);
  EXPECT_EQ(run_cli("frobnicate --config " + quoted(golden_path())), 1);
  EXPECT_EQ(run_cli("all"), 1);
  EXPECT_EQ(run_cli("all --config " + quoted(dir / "missing.json")), 1);
  EXPECT_EQ(run_cli("all --config " + quoted(config_with(dir, {{"foo", 1}})) + " --out " + quoted(dir / "o")), 1);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const auto dir = scratch_dir();
  EXPECT_EQ(run_cli("all --config " + quoted(golden_path()) + " --threads 1 --out " + quoted(dir / "a")), 0);
  EXPECT_EQ(run_cli("all --config " + quoted(golden_path()) + " --threads 4 --out " + quoted(dir / "b")), 0);
  for (const char* f : {"report.json", "massmap.csv", "decay.csv"})
    EXPECT_EQ(read_file(dir / "a" / f), read_file(dir / "b" / f)) << f;
}

TEST(Cli, DocumentedSamplesAreCurrent) {
  const fs::path samples(QUASILAB_SAMPLES_DIR);
  const auto out = scratch_dir();
  ASSERT_EQ(run_cli("all --config " + quoted(samples / "golden-small.json") + " --out " + quoted(out)), 0);
  for (const char* f : {"report.json", "massmap.csv", "decay.csv", "manifest.json", "family/manifest.json"})
    EXPECT_EQ(read_file(out / f), read_file(samples / "golden-small" / f)) << f;
}
