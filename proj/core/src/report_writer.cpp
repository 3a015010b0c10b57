#include "quasilab/report_writer.hpp"

#include "quasilab/family_io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace quasilab {

void LabResults::check(std::string name, std::string hypothesis, bool passed, std::string message) {
  checks.push_back({std::move(name), std::move(hypothesis), passed, std::move(message)});
}

bool LabResults::all_passed() const {
  return aborted.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string report_status(const LabResults& results) {
  if (results.checks.empty() && results.aborted.empty()) return "no checks requested";
  return results.all_passed() ? "pass" : "fail";
}

Json build_report(const LabResults& results) {
  static const std::map<std::string, std::string> kHypothesisNames = {
      {"A", "real principal symbol"},
      {"B", "real constant subprincipal symbol"},
      {"C", "complete integrability"},
      {"D", "isoenergetic nondegeneracy"},
      {"E", "normalized quasimode concentrated on the torus"},
      {"F", "Nekhoroshev quasiconvexity"}};

  Json report = results.sections;
  report["command"] = results.command;
  report["status"] = report_status(results);

  Json checks = Json::array();
  Json failures = Json::array();
  for (const auto& c : results.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}, {"message", c.message}};
    if (!c.hypothesis.empty()) {
      entry["hypothesis"] = c.hypothesis;
      entry["hypothesis_name"] = kHypothesisNames.at(c.hypothesis);
    }
    checks.push_back(entry);
    if (!c.passed) failures.push_back(entry);
  }
  for (const auto& a : results.aborted) failures.push_back(Json{{"name", "stage aborted"}, {"message", a}});
  report["checks"] = checks;
  report["failures"] = failures;
  report["aborted_stages"] = results.aborted;
  return report;
}

std::string massmap_csv(const std::optional<MassMap>& map) {
  std::string out;
  if (!map) return "x,xi,h,mass\n";
  const auto& grid = map->grid();
  const std::size_t n = grid.dimension;
  for (std::size_t i = 0; i < n; ++i) out += "x" + std::to_string(i + 1) + ",";
  for (std::size_t i = 0; i < n; ++i) out += "xi" + std::to_string(i + 1) + ",";
  out += "h,mass\n";
  for (std::size_t xi = 0; xi < grid.xi_points.size(); ++xi)
    for (std::size_t h = 0; h < map->h_ladder().size(); ++h)
      for (std::size_t x = 0; x < grid.x_count(); ++x) {
        for (double v : grid.x_node(x)) out += format_double(v) + ",";
        for (double v : grid.xi_points[xi]) out += format_double(v) + ",";
        out += format_double(map->h_ladder()[h]) + "," + format_double(map->mass(xi, h, x)) + "\n";
      }
  return out;
}

std::string decay_csv(const std::vector<DecayRow>& rows) {
  std::string out = "series,h,value\n";
  for (const auto& r : rows) out += r.series + "," + format_double(r.h) + "," + format_double(r.value) + "\n";
  return out;
}

void write_report(const LabResults& results, const Json& config_echo, const std::filesystem::path& out) {
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + out.string() + ": " + ec.message());
  write_text_file(out / "report.json", canonical_dump(build_report(results)));
  write_text_file(out / "massmap.csv", massmap_csv(results.mass_map));
  write_text_file(out / "decay.csv", decay_csv(results.decay));
  write_text_file(out / "config.echo", canonical_dump(config_echo));

  Json artifacts = Json::array({"config.echo", "decay.csv", "massmap.csv", "report.json"});
  if (results.sections.contains("quasimode") && results.sections["quasimode"].contains("family_dir"))
    artifacts.push_back(results.sections["quasimode"]["family_dir"]);
  const Json manifest{{"artifacts", artifacts},
                      {"command", results.command},
                      {"partial", !results.aborted.empty()},
                      {"aborted_stages", results.aborted},
                      {"massmap_written", results.mass_map.has_value()}};
  write_text_file(out / "manifest.json", canonical_dump(manifest));
}

}  // namespace quasilab
