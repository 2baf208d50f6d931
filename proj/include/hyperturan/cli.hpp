// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperturan {

/// Resolved parameters of one CLI run. Thread count is deliberately absent:
/// it never changes results.
struct ExperimentConfig {
  std::string command;
  std::string pattern;
  std::string pattern_file;
  int expand_to = 0;
  std::size_t n = 0;
  std::vector<std::string> p_grid;
  std::vector<std::uint64_t> seeds;
  std::uint64_t budget = 1'000'000;
  std::string mode = "desk";
  std::string method = "shadow";
  std::string lift = "chain";
  std::string fixture;
  std::string host_file;
  std::string threshold = "2";
  std::string gamma;
  std::string tau;
  std::uint64_t seed = 0;
  std::size_t cap = 0;
};

nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);
/// FNV-1a of the canonical (sorted-key, compact) JSON of the config,
/// including a digest of any input file it names.
std::string config_hash(const ExperimentConfig& c);

/// Directory holding the bundled fixtures: HYPERTURAN_DATA_DIR when set,
/// otherwise the source tree's data/fixtures.
std::filesystem::path fixture_dir();

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs the command line (args excludes the program name). Normal output
/// goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperturan
