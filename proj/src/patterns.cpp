// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/patterns.hpp"

#include "hyperturan/error.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace hyperturan {

namespace {

VertexSet pair(Vertex a, Vertex b) { return a < b ? VertexSet{a, b} : VertexSet{b, a}; }

}  // namespace

Hypergraph cycle_graph(int length) {
  if (length < 3) throw ParameterError("cycle length must be at least 3");
  std::vector<VertexSet> edges;
  for (int i = 0; i < length; ++i) edges.push_back(pair(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length)));
  return Hypergraph(2, static_cast<std::size_t>(length), std::move(edges));
}

Hypergraph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("K_{s,t} needs s, t >= 1");
  std::vector<VertexSet> edges;
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < s; ++i) edges.push_back(pair(static_cast<Vertex>(i), static_cast<Vertex>(s + j)));
  }
  return Hypergraph(2, static_cast<std::size_t>(s + t), std::move(edges));
}

namespace {

std::vector<std::vector<Vertex>> theta_paths(int a, int b) {
  std::vector<std::vector<Vertex>> paths;
  for (int i = 0; i < a; ++i) {
    std::vector<Vertex> p{0};
    for (int j = 1; j < b; ++j) p.push_back(static_cast<Vertex>(2 + i * (b - 1) + (j - 1)));
    p.push_back(1);
    paths.push_back(std::move(p));
  }
  return paths;
}

}  // namespace

Hypergraph theta_graph(int a, int b) {
  if (a < 2 || b < 2) throw ParameterError("theta graph needs a, b >= 2");
  std::vector<VertexSet> edges;
  for (const auto& p : theta_paths(a, b)) {
    for (std::size_t j = 1; j < p.size(); ++j) edges.push_back(pair(p[j - 1], p[j]));
  }
  return Hypergraph(2, static_cast<std::size_t>(2 + a * (b - 1)), std::move(edges));
}

Hypergraph path_graph(int k) {
  if (k < 2) throw ParameterError("path needs at least 2 vertices");
  std::vector<VertexSet> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back(pair(static_cast<Vertex>(i), static_cast<Vertex>(i + 1)));
  return Hypergraph(2, static_cast<std::size_t>(k), std::move(edges));
}

Hypergraph matching_graph(int k) {
  if (k < 1) throw ParameterError("matching needs at least one edge");
  std::vector<VertexSet> edges;
  for (int i = 0; i < k; ++i) edges.push_back(pair(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)));
  return Hypergraph(2, static_cast<std::size_t>(2 * k), std::move(edges));
}

std::vector<VertexSet> theta_tree_hint(const std::vector<std::vector<Vertex>>& paths) {
  std::vector<VertexSet> edges;
  for (const auto& p : paths) {
    if (p.size() < 3) throw ParameterError("theta tree needs paths with an internal vertex");
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      VertexSet e{p[j - 1], p[j], p.back()};
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<VertexSet> bipartite_tree_hint(int s, int t) {
  std::vector<VertexSet> edges;
  for (int j = 0; j < t; ++j) {
    VertexSet e;
    for (int i = 0; i < s; ++i) e.push_back(static_cast<Vertex>(i));
    e.push_back(static_cast<Vertex>(s + j));
    edges.push_back(std::move(e));
  }
  return edges;
}

PatternInfo parse_pattern(const std::string& raw) {
  std::string name;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) name.push_back(c);
  }
  std::smatch m;
  PatternInfo info;
  info.name = name;
  auto num = [&](int k) { return std::stoi(m[k].str()); };
  if (name == "edge") {
    info.family = PatternFamily::Edge;
    info.graph = Hypergraph(2, 2, {{0, 1}});
    return info;
  }
  if (std::regex_match(name, m, std::regex(R"(C(\d+))"))) {
    const int len = num(1);
    info.family = PatternFamily::Cycle;
    info.params = {len};
    info.graph = cycle_graph(len);
    info.density = Rational(len - 1, len - 2);
    if (len % 2 == 0) {
      const int half = len / 2;
      std::vector<Vertex> up, down;
      for (int i = 0; i <= half; ++i) up.push_back(static_cast<Vertex>(i));
      down.push_back(0);
      for (int i = len - 1; i >= half; --i) down.push_back(static_cast<Vertex>(i));
      if (half >= 2) info.tree_hint = theta_tree_hint({up, down});
    }
    return info;
  }
  if (std::regex_match(name, m, std::regex(R"(K(\d),?(\d))")) ||
      std::regex_match(name, m, std::regex(R"(K(\d+),(\d+))"))) {
    const int s = num(1);
    const int t = num(2);
    if (s > t) throw ParameterError("write K_{s,t} with s <= t");
    if (s < 1) throw ParameterError("K_{s,t} needs s >= 1");
    info.family = PatternFamily::CompleteBipartite;
    info.params = {s, t};
    info.graph = complete_bipartite(s, t);
    if (s + t > 2) info.density = Rational(s * t - 1, s + t - 2);
    info.tree_hint = bipartite_tree_hint(s, t);
    return info;
  }
  if (std::regex_match(name, m, std::regex(R"(theta(\d+),(\d+))"))) {
    const int a = num(1);
    const int b = num(2);
    info.family = PatternFamily::Theta;
    info.params = {a, b};
    info.graph = theta_graph(a, b);
    info.density = Rational(a * b - 1, a * (b - 1));
    info.tree_hint = theta_tree_hint(theta_paths(a, b));
    return info;
  }
  if (std::regex_match(name, m, std::regex(R"(P(\d+))"))) {
    const int k = num(1);
    info.family = PatternFamily::Path;
    info.params = {k};
    info.graph = path_graph(k);
    if (k >= 3) info.density = Rational(1);
    return info;
  }
  if (std::regex_match(name, m, std::regex(R"(M(\d+))"))) {
    const int k = num(1);
    info.family = PatternFamily::Matching;
    info.params = {k};
    info.graph = matching_graph(k);
    if (k >= 2) info.density = Rational(1, 2);
    return info;
  }
  throw ParameterError("unknown pattern '" + raw + "' (expected C<n>, K<s><t>, theta<a>,<b>, P<k>, M<k> or edge)");
}

std::size_t max_vertex_degree(const Hypergraph& h) { return h.max_degree(); }

}  // namespace hyperturan
