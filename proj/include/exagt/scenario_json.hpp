#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "exagt/scenario.hpp"

namespace exagt {

// Parses a scenario document (UTF-8 JSON). Throws ParseError for malformed
// JSON (message carries the byte offset), ParseError with the offending
// field path for schema violations, and ValidationError when the parsed
// scenario fails validate().
Scenario parse_scenario(const std::string& bytes);

// Canonical serialization: fixed key order, neighbors sorted, shortest
// round-trip number formatting. parse(serialize(s)) reproduces s exactly.
std::string serialize_scenario(const Scenario& scenario);

Scenario load_scenario_file(const std::filesystem::path& path);
void save_scenario_file(const Scenario& scenario, const std::filesystem::path& path);

// All *.json files in a directory (sorted by filename), or the single file
// itself. Throws IoError when nothing is found.
std::vector<std::filesystem::path> list_scenario_files(const std::filesystem::path& in);

}  // namespace exagt
