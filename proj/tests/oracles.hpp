// SPDX-License-Identifier: Apache-2.0
// Brute-force reference implementations. They share no code with the library
// beyond the Hypergraph container, and are only fast enough for tiny inputs.
#pragma once

#include "hyperturan/copies.hpp"
#include "hyperturan/hypergraph.hpp"
#include "hyperturan/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using hyperturan::EdgeId;
using hyperturan::Hypergraph;
using hyperturan::Rational;
using hyperturan::Vertex;
using hyperturan::VertexSet;

/// Edge-id sets of all copies of f in h, found by trying every injective map
/// from the non-isolated vertices of f into V(h).
inline std::set<std::vector<EdgeId>> copies(const Hypergraph& h, const Hypergraph& f) {
  std::vector<Vertex> verts = f.non_isolated_vertices();
  std::vector<int> slot(f.num_vertices(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) slot[verts[i]] = static_cast<int>(i);
  std::vector<Vertex> image(verts.size());
  std::vector<bool> used(h.num_vertices(), false);
  std::set<std::vector<EdgeId>> out;

  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == verts.size()) {
      std::vector<EdgeId> ids;
      for (const auto& e : f.edges()) {
        VertexSet img;
        for (Vertex v : e) img.push_back(image[slot[v]]);
        std::sort(img.begin(), img.end());
        auto id = h.find_edge(img);
        if (!id) return;
        ids.push_back(*id);
      }
      std::sort(ids.begin(), ids.end());
      out.insert(ids);
      return;
    }
    for (Vertex w = 0; w < h.num_vertices(); ++w) {
      if (used[w]) continue;
      used[w] = true;
      image[k] = w;
      // Prune: every pattern edge whose vertices are all placed must map to an edge.
      bool ok = true;
      for (const auto& e : f.edges()) {
        bool placed = std::all_of(e.begin(), e.end(), [&](Vertex v) { return slot[v] <= static_cast<int>(k); });
        if (!placed || std::find(e.begin(), e.end(), verts[k]) == e.end()) continue;
        VertexSet img;
        for (Vertex v : e) img.push_back(image[slot[v]]);
        std::sort(img.begin(), img.end());
        if (!h.contains_edge(img)) {
          ok = false;
          break;
        }
      }
      if (ok) place(k + 1);
      used[w] = false;
    }
  };
  place(0);
  return out;
}

/// max over edge subsets with at least two edges of (|E'|-1)/(v(E')-r).
inline Rational density(const Hypergraph& f) {
  const std::size_t m = f.num_edges();
  const int r = f.uniformity();
  Rational best(-1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int k = std::popcount(mask);
    if (k < 2) continue;
    std::set<Vertex> vs;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) vs.insert(f.edge(static_cast<EdgeId>(e)).begin(), f.edge(static_cast<EdgeId>(e)).end());
    }
    Rational d = hyperturan::make_rational(k - 1, static_cast<std::int64_t>(vs.size()) - r);
    best = std::max(best, d);
  }
  return best;
}

/// Largest F-free edge subset of h, by scanning every subset of E(h) against
/// the copy masks. Needs |E(h)| <= 30.
inline std::size_t ex(const Hypergraph& h, const Hypergraph& f) {
  std::vector<std::uint32_t> masks;
  for (const auto& ids : copies(h, f)) {
    std::uint32_t m = 0;
    for (EdgeId e : ids) m |= 1U << e;
    masks.push_back(m);
  }
  const std::size_t m = h.num_edges();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const auto sub = static_cast<std::uint32_t>(s);
    const auto size = static_cast<std::size_t>(std::popcount(sub));
    if (size <= best) continue;
    bool free = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t c) { return (c & sub) == c; });
    if (free) best = size;
  }
  return best;
}

/// Delta_i by AND-ing per-edge copy bitsets over every i-set of host edges.
inline std::size_t delta(const std::vector<std::vector<EdgeId>>& copy_edges, std::size_t host_edges, int i) {
  const std::size_t words = (copy_edges.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> through(host_edges, std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = 0; c < copy_edges.size(); ++c) {
    for (EdgeId e : copy_edges[c]) through[e][c / 64] |= std::uint64_t{1} << (c % 64);
  }
  std::vector<EdgeId> live;
  for (EdgeId e = 0; e < host_edges; ++e) {
    if (std::any_of(through[e].begin(), through[e].end(), [](std::uint64_t w) { return w != 0; })) live.push_back(e);
  }
  std::size_t best = 0;
  std::vector<std::uint64_t> acc(words);
  hyperturan::for_each_subset_of_size<EdgeId>(live, static_cast<std::size_t>(i), [&](std::span<const EdgeId> sigma) {
    std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
    for (EdgeId e : sigma) {
      for (std::size_t w = 0; w < words; ++w) acc[w] &= through[e][w];
    }
    std::size_t count = 0;
    for (std::uint64_t w : acc) count += static_cast<std::size_t>(std::popcount(w));
    best = std::max(best, count);
  });
  return best;
}

inline std::vector<std::vector<EdgeId>> edge_sets(const hyperturan::CopyCollection& c) {
  std::vector<std::vector<EdgeId>> out;
  for (const auto& copy : c.copies()) out.push_back(copy.edges);
  return out;
}

/// Codegree of every k-subset of every edge, by direct scan.
inline std::map<VertexSet, std::size_t> codegrees(const Hypergraph& h, int k) {
  std::map<VertexSet, std::size_t> out;
  for (const auto& e : h.edges()) {
    hyperturan::for_each_subset_of_size<Vertex>(e, static_cast<std::size_t>(k),
                                                [&](std::span<const Vertex> s) { ++out[VertexSet(s.begin(), s.end())]; });
  }
  return out;
}

/// Codegrees of the restrictions of edges to the parts in `mask`.
inline std::map<VertexSet, std::size_t> part_codegrees(const Hypergraph& h, unsigned mask) {
  std::map<VertexSet, std::size_t> out;
  for (const auto& e : h.edges()) {
    VertexSet s;
    for (Vertex v : e) {
      if (mask >> h.part_of(v) & 1U) s.push_back(v);
    }
    ++out[s];
  }
  return out;
}

inline bool free_of(const Hypergraph& h, const Hypergraph& f) { return copies(h, f).empty(); }

}  // namespace oracle
