#pragma once

#include "semilinear/json_io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cli {

std::string sha256_file(const std::filesystem::path& path);

/// Writes the document with a trailing newline; the bytes depend only on
/// the document.
void write_json(const std::filesystem::path& path, const semilinear::Json& doc);
void write_text(const std::filesystem::path& path, const std::string& text);
semilinear::Json read_json(const std::filesystem::path& path);

struct Manifest {
    std::string command;
    std::vector<std::string> args;  // without --out
    std::uint64_t seed = 0;
    semilinear::Json schedule;      // null when unused
    semilinear::Json inputs;        // path -> sha256
    semilinear::Json artifacts;     // file name -> sha256
};

/// manifest.json in `dir`, with the artifact hashes and a timestamp.
void write_manifest(const std::filesystem::path& dir, const Manifest& m);
Manifest read_manifest(const std::filesystem::path& path);

}  // namespace cli
