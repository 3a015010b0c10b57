#pragma once

#include "quasilab/json_io.hpp"
#include "quasilab/wavefront.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace quasilab {

/// One pass/fail item. `hypothesis` is "A".."F" when the check decides one
/// of the standing hypotheses, empty when it tests a conclusion.
struct CheckOutcome {
  std::string name;
  std::string hypothesis;
  bool passed = false;
  std::string message;
};

struct DecayRow {
  std::string series;
  double h = 0.0;
  double value = 0.0;
};

struct LabResults {
  std::string command;
  Json sections = Json::object();  ///< report sections keyed by stage name
  std::vector<CheckOutcome> checks;
  std::vector<DecayRow> decay;
  std::optional<MassMap> mass_map;
  std::vector<std::string> aborted;  ///< "stage: reason" for stages that threw

  void check(std::string name, std::string hypothesis, bool passed, std::string message = {});
  bool all_passed() const;
};

/// "pass", "fail", or "no checks requested".
std::string report_status(const LabResults& results);

Json build_report(const LabResults& results);
std::string massmap_csv(const std::optional<MassMap>& map);
std::string decay_csv(const std::vector<DecayRow>& rows);

/// Writes report.json, massmap.csv, decay.csv, config.echo and manifest.json
/// into `out`. Output bytes depend only on the inputs.
void write_report(const LabResults& results, const Json& config_echo, const std::filesystem::path& out);

}  // namespace quasilab
