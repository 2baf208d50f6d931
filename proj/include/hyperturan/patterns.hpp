// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/hypergraph.hpp"
#include "hyperturan/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperturan {

enum class PatternFamily { Cycle, CompleteBipartite, Theta, Path, Matching, Edge, Custom };

/// A named graph pattern with the facts the registry knows in closed form.
struct PatternInfo {
  std::string name;
  PatternFamily family = PatternFamily::Custom;
  std::vector<int> params;
  Hypergraph graph;
  /// Closed-form 2-density when the family has one (checked against
  /// exhaustive enumeration on small members in the tests).
  std::optional<Rational> density;
  /// Edges of a tight tree on the pattern's vertices whose 2-shadow contains
  /// the pattern, when the family has an explicit one.
  std::optional<std::vector<VertexSet>> tree_hint;
};

Hypergraph cycle_graph(int length);
/// K_{s,t} with S = {0..s-1} and T = {s..s+t-1}.
Hypergraph complete_bipartite(int s, int t);
/// a internally disjoint paths of length b between 0 and 1; the j-th internal
/// vertex of path i is 2 + i(b-1) + (j-1).
Hypergraph theta_graph(int a, int b);
/// Path with k vertices.
Hypergraph path_graph(int k);
/// k pairwise disjoint edges.
Hypergraph matching_graph(int k);

/// Tight 3-tree from paths given as vertex sequences sharing both endpoints:
/// edges {p[j-1], p[j], p.back()} for 1 <= j <= len-2.
std::vector<VertexSet> theta_tree_hint(const std::vector<std::vector<Vertex>>& paths);
/// Tight (s+1)-tree S + {w} for each w in T.
std::vector<VertexSet> bipartite_tree_hint(int s, int t);

/// Parses "C6", "K23", "K2,3", "theta3,3", "P4", "M2" or "edge".
PatternInfo parse_pattern(const std::string& name);

/// Largest vertex degree.
std::size_t max_vertex_degree(const Hypergraph& h);

}  // namespace hyperturan
