#pragma once

#include "quasilab/config.hpp"
#include "quasilab/report_writer.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace quasilab {

enum class Command { CheckHypotheses, Split, BuildQuasimode, Verify, Wavefront, All };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command command);

/// The config cannot drive the requested command (e.g. a factory stage with no factory block).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::filesystem::path out = "out";
  unsigned threads = 1;  ///< wavefront workers; results do not depend on it
};

/// Runs the stages of `command`. The factory family is written under
/// out/family when it is built. Throws UsageError when the config lacks what
/// the command needs.
LabResults run_stages(const LabConfig& config, Command command, const RunOptions& options);

/// run_stages followed by write_report. Returns 0 when every check passed and 2 otherwise.
int run_pipeline(const LabConfig& config, Command command, const RunOptions& options);

}  // namespace quasilab
