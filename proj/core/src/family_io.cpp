#include "quasilab/family_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quasilab {

namespace {

std::string member_file(std::size_t i) {
  char name[32];
  std::snprintf(name, sizeof name, "member_%03zu.json", i);
  return name;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_family(const std::filesystem::path& dir, const QuasimodeFamily& family, const Json& provenance) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  Json files = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string name = member_file(i);
    const Json member{{"index", i},
                      {"h", family.h_ladder[i]},
                      {"dimension", family.members[i].dimension()},
                      {"coefficients", to_json(family.members[i])}};
    write_text_file(dir / name, canonical_dump(member));
    files.push_back(name);
  }
  const Json manifest{{"dimension", family.dimension()},
                      {"h_ladder", family.h_ladder},
                      {"norms", family.norms},
                      {"normalization", "L2 norm of the coefficient vector equals 1"},
                      {"files", files},
                      {"provenance", provenance}};
  write_text_file(dir / "manifest.json", canonical_dump(manifest));
}

QuasimodeFamily read_family(const std::filesystem::path& dir) {
  const Json manifest = read_json_file(dir / "manifest.json");
  QuasimodeFamily family;
  try {
    const auto dim = manifest.at("dimension").get<std::size_t>();
    family.h_ladder = manifest.at("h_ladder").get<std::vector<double>>();
    const auto& files = manifest.at("files");
    if (files.size() != family.h_ladder.size())
      throw std::runtime_error("manifest lists " + std::to_string(files.size()) + " files for " +
                               std::to_string(family.h_ladder.size()) + " ladder points");
    for (const auto& name : files) {
      const auto path = dir / name.get<std::string>();
      const Json member = read_json_file(path);
      try {
        family.members.push_back(trig_polynomial_from_json(member.at("coefficients"), dim));
      } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
      }
      family.norms.push_back(family.members.back().l2_norm());
    }
  } catch (const Json::exception& e) {
    throw std::runtime_error((dir / "manifest.json").string() + ": " + e.what());
  }
  return family;
}

}  // namespace quasilab
