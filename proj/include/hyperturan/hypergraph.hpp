// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperturan {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted set of distinct vertex labels.
using VertexSet = std::vector<Vertex>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// 128-bit vertex mask; available when a hypergraph has at most 128 vertices.
struct Mask128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void set(Vertex v) noexcept { (v < 64 ? lo : hi) |= (1ULL << (v & 63)); }
  [[nodiscard]] bool test(Vertex v) const noexcept { return ((v < 64 ? lo : hi) >> (v & 63)) & 1ULL; }
  [[nodiscard]] bool contains(const Mask128& o) const noexcept { return (lo & o.lo) == o.lo && (hi & o.hi) == o.hi; }
  [[nodiscard]] bool intersects(const Mask128& o) const noexcept { return (lo & o.lo) != 0 || (hi & o.hi) != 0; }
  [[nodiscard]] int count() const noexcept { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
  Mask128& operator|=(const Mask128& o) noexcept {
    lo |= o.lo;
    hi |= o.hi;
    return *this;
  }
  friend bool operator==(const Mask128&, const Mask128&) = default;
};

/// An r-uniform hypergraph on the vertex labels 0..n-1.
///
/// Edges are stored sorted and kept in insertion order; duplicate edges and
/// edges of the wrong size are rejected at construction. The optional
/// partition assigns each vertex a part in [0, r); it does not force edges to
/// be partite, operations that need partite input check it themselves.
/// Instances are immutable and safe to share across threads.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int uniformity, std::size_t num_vertices, std::vector<VertexSet> edges,
             std::optional<std::vector<int>> partition = std::nullopt);

  /// Complete r-graph on n vertices, edges in lexicographic order.
  static Hypergraph complete(int uniformity, std::size_t num_vertices);

  [[nodiscard]] int uniformity() const noexcept { return r_; }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }

  [[nodiscard]] const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  [[nodiscard]] const VertexSet& edge(EdgeId e) const { return edges_.at(e); }
  [[nodiscard]] std::optional<EdgeId> find_edge(std::span<const Vertex> sorted_vertices) const;
  [[nodiscard]] bool contains_edge(std::span<const Vertex> sorted_vertices) const {
    return find_edge(sorted_vertices).has_value();
  }

  /// Edge ids containing v, ascending.
  [[nodiscard]] const std::vector<EdgeId>& incident(Vertex v) const { return incidence_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }
  [[nodiscard]] std::size_t max_degree() const noexcept;
  [[nodiscard]] std::vector<Vertex> non_isolated_vertices() const;
  [[nodiscard]] std::size_t num_non_isolated() const noexcept;

  [[nodiscard]] bool has_partition() const noexcept { return partition_.has_value(); }
  [[nodiscard]] const std::vector<int>& partition() const;
  [[nodiscard]] int part_of(Vertex v) const { return partition().at(v); }
  [[nodiscard]] bool is_partite_edge(EdgeId e) const;
  /// True when a partition is present and every edge meets each part once.
  [[nodiscard]] bool is_partite() const;

  [[nodiscard]] Hypergraph with_partition(std::vector<int> partition) const;
  [[nodiscard]] Hypergraph without_partition() const;
  /// Subgraph on the same vertex set keeping the listed edges (in the given order).
  [[nodiscard]] Hypergraph edge_subgraph(std::span<const EdgeId> keep) const;
  /// Drops isolated vertices and relabels the rest densely in increasing
  /// order. original[new_label] gives the old label.
  [[nodiscard]] Hypergraph without_isolated(std::vector<Vertex>* original = nullptr) const;

  [[nodiscard]] bool has_masks() const noexcept { return n_ <= 128; }
  [[nodiscard]] const Mask128& edge_mask(EdgeId e) const { return masks_.at(e); }

  /// Same uniformity, vertex count, edge set (order-insensitive) and partition.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  int r_ = 1;
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::optional<std::vector<int>> partition_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<VertexSet, EdgeId, VertexSetHash> index_;
  std::vector<Mask128> masks_;
};

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k, const std::function<void(std::span<const std::size_t>)>& fn);

/// Calls fn(subset) for every k-subset of the given sorted items.
template <typename T, typename Fn>
void for_each_subset_of_size(std::span<const T> items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = items[idx[i]];
    fn(std::span<const T>(current));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Sorted list of the k-shadows of h: k-sets contained in some edge.
/// With `parts` given (requires a partition) only shadows meeting each listed
/// part exactly once are returned; then k must equal parts.size().
std::vector<VertexSet> shadow(const Hypergraph& h, int k, std::optional<std::vector<int>> parts = std::nullopt);

/// Like shadow(), paired with each shadow's codegree in h.
std::vector<std::pair<VertexSet, std::size_t>> shadow_degrees(const Hypergraph& h, int k,
                                                              std::optional<std::vector<int>> parts = std::nullopt);

/// Number of edges of h containing s. Throws ParameterError for vertices outside h.
std::size_t codegree(const Hypergraph& h, std::span<const Vertex> s);

/// The |parts|-graph on the same vertex labels whose edges are the shadows of h
/// that meet each listed part once (h's r_0-shadow graph on V_{parts}).
Hypergraph shadow_graph(const Hypergraph& h, const std::vector<int>& parts);

/// Best of `trials` uniformly random r-partitions: the returned subgraph keeps
/// the partite edges and carries the partition. An already partite input is
/// returned unchanged.
Hypergraph max_partite_subgraph(const Hypergraph& h, int trials, std::uint64_t seed);

}  // namespace hyperturan
