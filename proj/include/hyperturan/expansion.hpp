// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/hypergraph.hpp"
#include "hyperturan/patterns.hpp"
#include "hyperturan/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperturan {

/// Label of the fresh vertex added to edge `edge`, slot `slot` (0-based),
/// when an r0-graph on n vertices is expanded to uniformity r.
Vertex expansion_vertex(std::size_t n, int r0, int r, EdgeId edge, int slot);

/// Adds r - r0 fresh vertices to each edge. Edge k keeps position k; its fresh
/// vertices are expansion_vertex(n, r0, r, k, 0..r-r0-1). Partitions are dropped.
Hypergraph expand(const Hypergraph& f, int r);

/// Exhaustive limit for r_density (2^edges subsets).
inline constexpr std::size_t kMaxDensityEdges = 24;

struct DensityReport {
  Rational density;
  /// Edge ids of a maximizing subgraph; ties keep the smallest subset mask.
  std::vector<EdgeId> optimal_edges;
  std::size_t optimal_vertices = 0;
  /// Subgraphs with at least two edges that were evaluated.
  std::uint64_t examined = 0;
  /// "exhaustive" or "closed-form".
  std::string method = "exhaustive";
};

/// max over subgraphs F' with |F'| >= 2 of (|F'|-1)/(v(F')-r), by full
/// enumeration of edge subsets. Throws UndefinedDensityError when |F| < 2 and
/// ParameterError above kMaxDensityEdges edges.
DensityReport r_density(const Hypergraph& f);

/// 1/d_r(F^(r)) = r - r0 + 1/d_{r0}(F), solved for d_r(F^(r)).
Rational expanded_density(const Rational& core_density, int r0, int r);

/// Density of a registry pattern expanded to uniformity r: exhaustive when the
/// expansion is small enough, otherwise the family's closed form carried
/// through expanded_density.
DensityReport pattern_density(const PatternInfo& pattern, int r);

struct DensityRelation {
  int r0 = 2;
  int r = 2;
  Rational core_density;      // d_{r0}(F)
  Rational expanded;          // d_r(F^(r))
  Rational lhs;               // 1 / d_r(F^(r))
  Rational rhs;               // r - r0 + 1/d_{r0}(F)
  bool holds = false;
  /// d_r(F^(r)) < 1/(r - r0); only meaningful when r > r0.
  bool strict_bound = true;
};

/// Computes both sides exactly with two independent r_density runs.
DensityRelation check_density_relation(const Hypergraph& f, int r);

struct TightTreeCertificate {
  int r = 0;
  std::vector<VertexSet> edges;
  /// new_vertex[i] and witness[i] are meaningful for i >= 1:
  /// new_vertex[i] is in no earlier edge and edges[i] - new_vertex[i] is a
  /// subset of edges[witness[i]] with witness[i] < i.
  std::vector<Vertex> new_vertex;
  std::vector<std::size_t> witness;
};

/// Checks the certificate against the definition of a tight tree.
bool validate_certificate(const TightTreeCertificate& c);

/// Every edge of f lies inside some certificate edge and both use exactly
/// the same vertices.
bool certificate_spans(const TightTreeCertificate& c, const Hypergraph& f);

/// Searches for a tight-tree edge order: leaf peeling first, then
/// backtracking over orders with memoized failures.
std::optional<TightTreeCertificate> is_tight_tree(const Hypergraph& t);

/// A tight r-tree containing expand(f, r) as a spanning subgraph, built from
/// a tight r0-tree T' on V(f) whose k-shadow contains f (k = uniformity of f).
/// T' comes from `hint` when given, otherwise from brute force over
/// r0 in {k, k+1} when f has at most 8 vertices. Throws NotApplicableError
/// when no T' is found.
TightTreeCertificate spanning_tight_tree(const Hypergraph& f, int r,
                                         const std::optional<std::vector<VertexSet>>& hint = std::nullopt);

}  // namespace hyperturan
