// Command line front end: quasilab <subcommand> --config PATH [--out DIR] [--ladder A..B] [--seed N] [--threads N]

#include "quasilab/config.hpp"
#include "quasilab/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace {

constexpr int kUsageError = 1;

struct Flags {
  std::string config;
  std::string out;
  std::string ladder;
  std::int64_t seed = -1;
  unsigned threads = 1;
};

void add_flags(CLI::App& cmd, Flags& flags) {
  cmd.add_option("--config", flags.config, "JSON config file")->required();
  cmd.add_option("--out", flags.out, "output directory (overrides the config)");
  cmd.add_option("--ladder", flags.ladder, "h = 2^-j for j in A..B, e.g. 4..12");
  cmd.add_option("--seed", flags.seed, "seed for randomized controls")->check(CLI::NonNegativeNumber);
  cmd.add_option("--threads", flags.threads, "wavefront worker threads")->check(CLI::Range(1u, 256u));
}

int run(const std::string& name, const Flags& flags) {
  std::ifstream in(flags.config);
  if (!in) {
    std::cerr << "error: cannot read config " << flags.config << "\n";
    return kUsageError;
  }
  std::stringstream text;
  text << in.rdbuf();

  quasilab::LabConfig config;
  try {
    config = quasilab::parse_config(text.str());
  } catch (const quasilab::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }
  if (!flags.ladder.empty()) {
    static const std::regex pattern(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(flags.ladder, m, pattern)) {
      std::cerr << "error: --ladder expects A..B, got " << flags.ladder << "\n";
      return kUsageError;
    }
    config.j_min = std::stoi(m[1]);
    config.j_max = std::stoi(m[2]);
    if (config.j_max > 40 || config.j_max - config.j_min < 3) {
      std::cerr << "error: --ladder needs at least 4 points with B <= 40\n";
      return kUsageError;
    }
  }
  if (flags.seed >= 0) config.seed = static_cast<std::uint64_t>(flags.seed);
  if (!flags.out.empty()) config.output = flags.out;

  quasilab::RunOptions options;
  options.out = config.output;
  options.threads = flags.threads;
  try {
    const int code = quasilab::run_pipeline(config, *quasilab::parse_command(name), options);
    std::cout << name << ": " << (code == 0 ? "all checks passed" : "some checks failed") << " (report in "
              << options.out.string() << "/report.json)\n";
    return code;
  } catch (const quasilab::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasimode nonconcentration laboratory"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"check-hypotheses", "decide nondegeneracy, quasiconvexity and the Maslov congruence"},
      {"split", "split the torus along the orbit closure and find the resonant mode"},
      {"build-quasimode", "construct the factory quasimode family"},
      {"verify", "check quasimode order, mode concentration, Galerkin kernel and unique continuation"},
      {"wavefront", "compute the coherent-state mass map and wavefront verdicts"},
      {"all", "run every stage"}};
  Flags flags;
  for (const auto& [name, help] : commands) add_flags(*app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  return run(app.get_subcommands().front()->get_name(), flags);
}
