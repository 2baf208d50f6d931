// SPDX-License-Identifier: Apache-2.0
// Small constructed hosts shared by the unit tests and the acceptance binary.
#pragma once

#include "hyperturan/expansion.hpp"
#include "hyperturan/hypergraph.hpp"
#include "hyperturan/patterns.hpp"
#include "hyperturan/random.hpp"

#include <vector>

namespace fixture {

using hyperturan::Hypergraph;
using hyperturan::Vertex;
using hyperturan::VertexSet;

/// Tripartite 3-graph with parts of sizes a, b, c (labels in that order);
/// triple (i, j, k) is present when keep(i, j, k).
template <typename Keep>
Hypergraph tripartite(int a, int b, int c, Keep keep) {
  std::vector<VertexSet> edges;
  std::vector<int> part;
  for (int i = 0; i < a; ++i) part.push_back(0);
  for (int j = 0; j < b; ++j) part.push_back(1);
  for (int k = 0; k < c; ++k) part.push_back(2);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      for (int k = 0; k < c; ++k) {
        if (keep(i, j, k)) {
          edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j), static_cast<Vertex>(a + b + k)});
        }
      }
    }
  }
  return Hypergraph(3, static_cast<std::size_t>(a + b + c), std::move(edges), std::move(part));
}

inline Hypergraph complete_tripartite(int a, int b, int c) {
  return tripartite(a, b, c, [](int, int, int) { return true; });
}

/// C_4^(3) with the core 4-cycle split over parts 0 and 1 and the four
/// expansion vertices in part 2.
inline Hypergraph partite_c4_expansion() {
  return hyperturan::expand(hyperturan::cycle_graph(4), 3).with_partition({0, 1, 0, 1, 2, 2, 2, 2});
}

/// A 4-cycle on parts 0, 1 with `width` private third vertices per cycle
/// edge, so every core pair has codegree exactly `width`.
inline Hypergraph c4_gadget(int width = 2) {
  const Hypergraph c4 = hyperturan::cycle_graph(4);
  std::vector<VertexSet> edges;
  std::vector<int> part = {0, 1, 0, 1};
  Vertex next = 4;
  for (const auto& e : c4.edges()) {
    for (int q = 0; q < width; ++q) {
      edges.push_back({e[0], e[1], next++});
      part.push_back(2);
    }
  }
  return Hypergraph(3, next, std::move(edges), std::move(part));
}

/// Parts of size 3, 3, 6: pair (i, j) sees the third vertices k < 4, plus
/// k = 4, 5 when i + j is even. Core codegrees are 4 or 6.
inline Hypergraph uneven_codegree_host() {
  return tripartite(3, 3, 6, [](int i, int j, int k) { return k < 4 || (i + j) % 2 == 0; });
}

/// Random r-partite r-graph: part sizes drawn from [min_part, max_part], each
/// partite r-set kept with probability num/den.
inline Hypergraph random_partite(int r, int min_part, int max_part, std::uint64_t num, std::uint64_t den,
                                 std::uint64_t seed) {
  hyperturan::RngStream rng(hyperturan::CounterRng(seed, 17));
  std::vector<int> sizes(static_cast<std::size_t>(r));
  std::vector<int> part;
  std::vector<Vertex> first(static_cast<std::size_t>(r));
  for (int p = 0; p < r; ++p) {
    sizes[p] = min_part + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_part - min_part + 1)));
    first[p] = static_cast<Vertex>(part.size());
    for (int k = 0; k < sizes[p]; ++k) part.push_back(p);
  }
  const hyperturan::CounterRng keep(seed, 18);
  std::vector<VertexSet> edges;
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  std::uint64_t counter = 0;
  while (true) {
    VertexSet e;
    for (int p = 0; p < r; ++p) e.push_back(first[p] + static_cast<Vertex>(idx[p]));
    if (keep.bernoulli(counter++, num, den)) edges.push_back(e);
    int p = r - 1;
    while (p >= 0 && ++idx[p] == sizes[p]) idx[p--] = 0;
    if (p < 0) break;
  }
  if (edges.empty()) edges.push_back({first.begin(), first.end()});
  const std::size_t n = part.size();
  return Hypergraph(r, n, std::move(edges), std::move(part));
}

}  // namespace fixture
