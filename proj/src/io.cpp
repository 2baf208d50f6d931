// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/io.hpp"

#include "hyperturan/error.hpp"

#include <fstream>
#include <sstream>

namespace hyperturan {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

long long parse_field(std::istringstream& fields, std::size_t line_no, const char* what) {
  long long value = 0;
  if (!(fields >> value)) {
    throw FormatError("line " + std::to_string(line_no) + ": expected " + what);
  }
  return value;
}

}  // namespace

Hypergraph read_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw FormatError("missing header line \"r n m\"");
  std::istringstream header(line);
  const long long r = parse_field(header, line_no, "uniformity r");
  const long long n = parse_field(header, line_no, "vertex count n");
  const long long m = parse_field(header, line_no, "edge count m");
  if (r < 1 || n < 0 || m < 0) throw FormatError("header values must be non-negative with r >= 1");
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw FormatError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream fields(line);
    VertexSet e;
    for (long long k = 0; k < r; ++k) {
      const long long v = parse_field(fields, line_no, "vertex index");
      if (v < 0 || v >= n) throw FormatError("line " + std::to_string(line_no) + ": vertex out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    std::string extra;
    if (fields >> extra) throw FormatError("line " + std::to_string(line_no) + ": too many vertices");
    edges.push_back(std::move(e));
  }
  if (next_content_line(in, line, line_no)) throw FormatError("line " + std::to_string(line_no) + ": trailing data");
  try {
    return Hypergraph(static_cast<int>(r), static_cast<std::size_t>(n), std::move(edges));
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

void write_text(std::ostream& out, const Hypergraph& h) {
  out << h.uniformity() << ' ' << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

Hypergraph from_json(const nlohmann::json& j) {
  try {
    const int r = j.at("r").get<int>();
    const auto n = j.at("n").get<std::size_t>();
    auto edges = j.at("edges").get<std::vector<VertexSet>>();
    std::optional<std::vector<int>> parts;
    if (j.contains("partition") && !j.at("partition").is_null()) {
      parts = j.at("partition").get<std::vector<int>>();
      for (int& p : *parts) {
        if (p < 1 || p > r) throw FormatError("partition labels must lie in 1..r");
        p -= 1;
      }
    }
    return Hypergraph(r, n, std::move(edges), std::move(parts));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed hypergraph JSON: ") + e.what());
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["r"] = h.uniformity();
  j["n"] = h.num_vertices();
  j["edges"] = h.edges();
  if (h.has_partition()) {
    std::vector<int> parts = h.partition();
    for (int& p : parts) p += 1;
    j["partition"] = parts;
  }
  return j;
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
    return from_json(j);
  }
  return read_text(in);
}

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << to_json(h).dump(2) << '\n';
  } else {
    write_text(out, h);
  }
}

}  // namespace hyperturan
