// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/hypergraph.hpp"

#include "hyperturan/error.hpp"
#include "hyperturan/random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hyperturan {

Hypergraph::Hypergraph(int uniformity, std::size_t num_vertices, std::vector<VertexSet> edges,
                       std::optional<std::vector<int>> partition)
    : r_(uniformity), n_(num_vertices), edges_(std::move(edges)), partition_(std::move(partition)) {
  if (r_ < 1) throw ParameterError("uniformity must be at least 1");
  if (n_ > 0xFFFFFFFFULL) throw ParameterError("too many vertices");
  incidence_.assign(n_, {});
  index_.reserve(edges_.size() * 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    VertexSet& e = edges_[i];
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r_) {
      throw ParameterError("edge " + std::to_string(i) + " has " + std::to_string(e.size()) + " vertices, expected " +
                           std::to_string(r_));
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParameterError("edge " + std::to_string(i) + " repeats a vertex");
    }
    if (!e.empty() && e.back() >= n_) {
      throw ParameterError("edge " + std::to_string(i) + " uses vertex " + std::to_string(e.back()) +
                           " outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (!index_.emplace(e, static_cast<EdgeId>(i)).second) {
      throw ParameterError("duplicate edge at position " + std::to_string(i));
    }
    for (Vertex v : e) incidence_[v].push_back(static_cast<EdgeId>(i));
  }
  if (partition_) {
    if (partition_->size() != n_) throw ParameterError("partition must label every vertex");
    for (int p : *partition_) {
      if (p < 0 || p >= r_) throw ParameterError("partition labels must lie in [0, r)");
    }
  }
  if (n_ <= 128) {
    masks_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (Vertex v : edges_[i]) masks_[i].set(v);
    }
  }
}

Hypergraph Hypergraph::complete(int uniformity, std::size_t num_vertices) {
  if (uniformity < 1) throw ParameterError("uniformity must be at least 1");
  std::vector<VertexSet> edges;
  for_each_combination(num_vertices, static_cast<std::size_t>(uniformity), [&](std::span<const std::size_t> s) {
    edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(uniformity, num_vertices, std::move(edges));
}

std::optional<EdgeId> Hypergraph::find_edge(std::span<const Vertex> sorted_vertices) const {
  if (static_cast<int>(sorted_vertices.size()) != r_) return std::nullopt;
  const auto it = index_.find(VertexSet(sorted_vertices.begin(), sorted_vertices.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Hypergraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

std::vector<Vertex> Hypergraph::non_isolated_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (!incidence_[v].empty()) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t Hypergraph::num_non_isolated() const noexcept {
  std::size_t count = 0;
  for (const auto& inc : incidence_) count += inc.empty() ? 0 : 1;
  return count;
}

const std::vector<int>& Hypergraph::partition() const {
  if (!partition_) throw PreconditionError("hypergraph has no partition");
  return *partition_;
}

bool Hypergraph::is_partite_edge(EdgeId e) const {
  const auto& parts = partition();
  std::uint64_t seen = 0;
  for (Vertex v : edges_.at(e)) {
    const auto bit = 1ULL << parts[v];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool Hypergraph::is_partite() const {
  if (!partition_ || r_ > 64) return false;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!is_partite_edge(static_cast<EdgeId>(e))) return false;
  }
  return true;
}

Hypergraph Hypergraph::with_partition(std::vector<int> partition) const {
  return Hypergraph(r_, n_, edges_, std::move(partition));
}

Hypergraph Hypergraph::without_partition() const { return Hypergraph(r_, n_, edges_); }

Hypergraph Hypergraph::edge_subgraph(std::span<const EdgeId> keep) const {
  std::vector<VertexSet> kept;
  kept.reserve(keep.size());
  for (EdgeId e : keep) kept.push_back(edges_.at(e));
  return Hypergraph(r_, n_, std::move(kept), partition_);
}

Hypergraph Hypergraph::without_isolated(std::vector<Vertex>* original) const {
  std::vector<Vertex> keep = non_isolated_vertices();
  std::vector<Vertex> relabel(n_, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    VertexSet mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) mapped.push_back(relabel[v]);
    edges.push_back(std::move(mapped));
  }
  std::optional<std::vector<int>> parts;
  if (partition_) {
    parts.emplace();
    for (Vertex v : keep) parts->push_back((*partition_)[v]);
  }
  if (original) *original = keep;
  return Hypergraph(r_, keep.size(), std::move(edges), std::move(parts));
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.r_ != b.r_ || a.n_ != b.n_ || a.edges_.size() != b.edges_.size() || a.partition_ != b.partition_) {
    return false;
  }
  for (const auto& e : a.edges_) {
    if (!b.contains_edge(e)) return false;
  }
  return true;
}

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(std::span<const std::size_t>)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

void check_shadow_args(const Hypergraph& h, int k, const std::optional<std::vector<int>>& parts) {
  if (k < 1 || k > h.uniformity()) {
    throw ParameterError("shadow size k=" + std::to_string(k) + " must lie in 1.." + std::to_string(h.uniformity()));
  }
  if (parts) {
    if (!h.has_partition()) throw ParameterError("part filter requires a partition");
    if (static_cast<int>(parts->size()) != k) throw ParameterError("part filter must list exactly k parts");
    std::set<int> distinct(parts->begin(), parts->end());
    if (distinct.size() != parts->size()) throw ParameterError("part filter repeats a part");
    for (int p : *parts) {
      if (p < 0 || p >= h.uniformity()) throw ParameterError("part filter names a part outside [0, r)");
    }
  }
}

// Visits every k-subset of every edge that passes the optional part filter,
// once per (edge, subset) occurrence.
template <typename Fn>
void visit_edge_subsets(const Hypergraph& h, int k, const std::optional<std::vector<int>>& parts, Fn&& fn) {
  if (parts) {
    std::uint64_t wanted = 0;
    for (int p : *parts) wanted |= 1ULL << p;
    const auto& part = h.partition();
    VertexSet s;
    for (const auto& e : h.edges()) {
      s.clear();
      std::uint64_t seen = 0;
      bool ok = true;
      for (Vertex v : e) {
        const auto bit = 1ULL << part[v];
        if (!(wanted & bit)) continue;
        if (seen & bit) {
          ok = false;
          break;
        }
        seen |= bit;
        s.push_back(v);
      }
      if (ok && seen == wanted) fn(s);
    }
    return;
  }
  for (const auto& e : h.edges()) {
    for_each_subset_of_size<Vertex>(std::span<const Vertex>(e), static_cast<std::size_t>(k),
                                    [&](std::span<const Vertex> sub) { fn(VertexSet(sub.begin(), sub.end())); });
  }
}

}  // namespace

std::vector<std::pair<VertexSet, std::size_t>> shadow_degrees(const Hypergraph& h, int k,
                                                              std::optional<std::vector<int>> parts) {
  check_shadow_args(h, k, parts);
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> counts;
  visit_edge_subsets(h, k, parts, [&](const VertexSet& s) { ++counts[s]; });
  std::vector<std::pair<VertexSet, std::size_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> shadow(const Hypergraph& h, int k, std::optional<std::vector<int>> parts) {
  auto degrees = shadow_degrees(h, k, std::move(parts));
  std::vector<VertexSet> out;
  out.reserve(degrees.size());
  for (auto& [s, d] : degrees) out.push_back(std::move(s));
  return out;
}

std::size_t codegree(const Hypergraph& h, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= h.num_vertices()) throw ParameterError("vertex " + std::to_string(v) + " is not in the hypergraph");
  }
  if (s.empty()) return h.num_edges();
  Vertex pivot = s[0];
  for (Vertex v : s) {
    if (h.degree(v) < h.degree(pivot)) pivot = v;
  }
  std::size_t count = 0;
  for (EdgeId e : h.incident(pivot)) {
    const auto& edge = h.edge(e);
    bool all = true;
    for (Vertex v : s) {
      if (!std::binary_search(edge.begin(), edge.end(), v)) {
        all = false;
        break;
      }
    }
    count += all ? 1 : 0;
  }
  return count;
}

Hypergraph shadow_graph(const Hypergraph& h, const std::vector<int>& parts) {
  auto edges = shadow(h, static_cast<int>(parts.size()), parts);
  return Hypergraph(static_cast<int>(parts.size()), h.num_vertices(), std::move(edges));
}

Hypergraph max_partite_subgraph(const Hypergraph& h, int trials, std::uint64_t seed) {
  if (trials < 1) throw ParameterError("trials must be at least 1");
  if (h.is_partite()) return h;
  const int r = h.uniformity();
  if (r > 64) throw ParameterError("uniformity above 64 is not supported for partitioning");
  const CounterRng rng(seed);
  std::vector<EdgeId> best_keep;
  std::vector<int> best_part;
  bool have_best = false;
  std::vector<int> part(h.num_vertices());
  for (int t = 0; t < trials; ++t) {
    const CounterRng trial = rng.split(static_cast<std::uint64_t>(t));
    for (std::size_t v = 0; v < part.size(); ++v) {
      part[v] = static_cast<int>(trial.below(v, static_cast<std::uint64_t>(r)));
    }
    std::vector<EdgeId> keep;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      std::uint64_t seen = 0;
      bool ok = true;
      for (Vertex v : h.edge(static_cast<EdgeId>(e))) {
        const auto bit = 1ULL << part[v];
        if (seen & bit) {
          ok = false;
          break;
        }
        seen |= bit;
      }
      if (ok) keep.push_back(static_cast<EdgeId>(e));
    }
    if (!have_best || keep.size() > best_keep.size()) {
      best_keep = std::move(keep);
      best_part = part;
      have_best = true;
    }
  }
  if (best_keep.empty() && h.num_edges() > 0) {
    throw InvariantError("every random partition destroyed all edges");
  }
  std::vector<VertexSet> edges;
  edges.reserve(best_keep.size());
  for (EdgeId e : best_keep) edges.push_back(h.edge(e));
  return Hypergraph(r, h.num_vertices(), std::move(edges), std::move(best_part));
}

}  // namespace hyperturan
