// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/hypergraph.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace hyperturan {

/// Text format: a header line "r n m", then m lines of r 0-based vertex
/// indices. Lines starting with '#' are comments; blank lines are skipped.
Hypergraph read_text(std::istream& in);
void write_text(std::ostream& out, const Hypergraph& h);

/// JSON format: {"r":..., "n":..., "edges":[[...],...], "partition":[...]}.
/// Partition labels in JSON run 1..r.
Hypergraph from_json(const nlohmann::json& j);
nlohmann::json to_json(const Hypergraph& h);

/// Picks the format by extension (".json" or anything else for text).
Hypergraph load_hypergraph(const std::filesystem::path& path);
void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h);

}  // namespace hyperturan
