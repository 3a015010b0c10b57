#pragma once

#include "quasilab/json_io.hpp"
#include "quasilab/quasimode.hpp"

#include <filesystem>

namespace quasilab {

/// Writes one coefficient file per ladder point (member_000.json, ...) and a
/// manifest.json recording the ladder, norms, normalization and `provenance`.
void write_family(const std::filesystem::path& dir, const QuasimodeFamily& family, const Json& provenance);

/// Reads a directory written by write_family. Throws std::runtime_error on I/O
/// or format problems, naming the offending file.
QuasimodeFamily read_family(const std::filesystem::path& dir);

/// Writes text to a file, throwing std::runtime_error that names the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace quasilab
