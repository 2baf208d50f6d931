// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/copies.hpp"

#include "hyperturan/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace hyperturan {

CopyCollection::CopyCollection(std::shared_ptr<const Hypergraph> host, std::shared_ptr<const Hypergraph> pattern)
    : host_(std::move(host)), pattern_(std::move(pattern)) {
  if (!host_ || !pattern_) throw ParameterError("copy collection needs a host and a pattern");
}

bool CopyCollection::insert(Copy copy) {
  std::sort(copy.edges.begin(), copy.edges.end());
  if (!index_.insert(copy.edges).second) return false;
  copies_.push_back(std::move(copy));
  return true;
}

CopyCollection CopyCollection::subset(const std::vector<std::size_t>& keep) const {
  CopyCollection out(host_, pattern_);
  for (std::size_t i : keep) out.insert(copies_.at(i));
  return out;
}

namespace {

constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

class Embedder {
 public:
  Embedder(const Hypergraph& host, const Hypergraph& pattern, std::size_t cap, CopyCollection& out)
      : host_(host), pattern_(pattern), cap_(cap), out_(out) {
    order_edges();
    compute_twins();
    image_.assign(pattern_.num_vertices(), kUnmapped);
    host_used_.assign(host_.num_vertices(), 0);
    chosen_.assign(pattern_.num_edges(), 0);
  }

  void run() {
    if (pattern_.num_edges() == 0 || pattern_.num_edges() > host_.num_edges()) return;
    if (pattern_.num_vertices() > host_.num_vertices()) return;
    extend(0);
  }

 private:
  // BFS over the edge intersection graph; components in order of their
  // smallest edge.
  void order_edges() {
    const std::size_t m = pattern_.num_edges();
    std::vector<char> placed(m, 0);
    for (std::size_t start = 0; start < m; ++start) {
      if (placed[start]) continue;
      std::deque<EdgeId> queue{static_cast<EdgeId>(start)};
      placed[start] = 1;
      while (!queue.empty()) {
        const EdgeId e = queue.front();
        queue.pop_front();
        order_.push_back(e);
        for (Vertex v : pattern_.edge(e)) {
          for (EdgeId f : pattern_.incident(v)) {
            if (!placed[f]) {
              placed[f] = 1;
              queue.push_back(f);
            }
          }
        }
      }
    }
  }

  // Vertices with identical incident edge lists are interchangeable; they are
  // always first placed together, and are assigned increasing host labels.
  void compute_twins() {
    std::map<std::vector<EdgeId>, int> classes;
    twin_class_.resize(pattern_.num_vertices());
    for (std::size_t v = 0; v < pattern_.num_vertices(); ++v) {
      const auto& inc = pattern_.incident(static_cast<Vertex>(v));
      twin_class_[v] = classes.emplace(inc, static_cast<int>(classes.size())).first->second;
    }
  }

  bool done() const { return out_.size() > cap_ || out_.truncated; }

  void extend(std::size_t depth) {
    if (done()) return;
    if (depth == order_.size()) {
      emit();
      return;
    }
    const EdgeId pe = order_[depth];
    const VertexSet& pedge = pattern_.edge(pe);
    Vertex pivot = kUnmapped;
    for (Vertex v : pedge) {
      if (image_[v] != kUnmapped && (pivot == kUnmapped || host_.degree(image_[v]) < host_.degree(pivot))) {
        pivot = image_[v];
      }
    }
    if (pivot == kUnmapped) {
      for (std::size_t h = 0; h < host_.num_edges() && !done(); ++h) try_edge(depth, pedge, static_cast<EdgeId>(h));
    } else {
      for (EdgeId h : host_.incident(pivot)) {
        if (done()) return;
        try_edge(depth, pedge, h);
      }
    }
  }

  void try_edge(std::size_t depth, const VertexSet& pedge, EdgeId h) {
    const VertexSet& hedge = host_.edge(h);
    std::vector<Vertex> unmapped;
    for (Vertex v : pedge) {
      if (image_[v] == kUnmapped) {
        unmapped.push_back(v);
      } else if (!std::binary_search(hedge.begin(), hedge.end(), image_[v])) {
        return;
      }
    }
    std::vector<Vertex> free;
    for (Vertex u : hedge) {
      if (!host_used_[u]) free.push_back(u);
    }
    if (free.size() != unmapped.size()) return;
    chosen_[depth] = h;
    assign(depth, unmapped, free, 0);
  }

  void assign(std::size_t depth, const std::vector<Vertex>& unmapped, std::vector<Vertex>& free, std::size_t k) {
    if (done()) return;
    if (k == unmapped.size()) {
      extend(depth + 1);
      return;
    }
    const Vertex p = unmapped[k];
    Vertex floor_label = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (twin_class_[unmapped[j]] == twin_class_[p]) floor_label = std::max(floor_label, image_[unmapped[j]] + 1);
    }
    for (Vertex& u : free) {
      if (u == kUnmapped || u < floor_label) continue;
      if (host_.degree(u) < pattern_.degree(p)) continue;
      const Vertex chosen = u;
      u = kUnmapped;
      image_[p] = chosen;
      host_used_[chosen] = 1;
      assign(depth, unmapped, free, k + 1);
      host_used_[chosen] = 0;
      image_[p] = kUnmapped;
      u = chosen;
    }
  }

  void emit() {
    Copy c;
    c.edges.assign(chosen_.begin(), chosen_.end());
    c.embedding = image_;
    if (out_.contains([&] {
          auto s = c.edges;
          std::sort(s.begin(), s.end());
          return s;
        }())) {
      return;
    }
    if (out_.size() == cap_) {
      out_.truncated = true;
      return;
    }
    out_.insert(std::move(c));
  }

  const Hypergraph& host_;
  const Hypergraph& pattern_;
  std::size_t cap_;
  CopyCollection& out_;
  std::vector<EdgeId> order_;
  std::vector<int> twin_class_;
  std::vector<Vertex> image_;
  std::vector<char> host_used_;
  std::vector<EdgeId> chosen_;
};

}  // namespace

CopyCollection enumerate_copies(std::shared_ptr<const Hypergraph> host, const Hypergraph& pattern, std::size_t cap) {
  if (host->uniformity() != pattern.uniformity()) throw ParameterError("host and pattern uniformities differ");
  auto stripped = std::make_shared<const Hypergraph>(pattern.without_isolated());
  CopyCollection out(host, stripped);
  Embedder(*host, *stripped, cap, out).run();
  return out;
}

CopyCollection enumerate_copies(const Hypergraph& host, const Hypergraph& pattern, std::size_t cap) {
  return enumerate_copies(std::make_shared<const Hypergraph>(host), pattern, cap);
}

bool contains_copy(const Hypergraph& host, const Hypergraph& pattern) {
  return !enumerate_copies(host, pattern, 1).empty();
}

DeltaValue delta_i(const CopyCollection& c, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > c.pattern().num_edges()) {
    throw ParameterError("delta index must lie in 1..|pattern|");
  }
  if (c.empty()) return {0, true};
  std::unordered_map<std::vector<EdgeId>, std::size_t, EdgeIdsHash> counts;
  std::size_t best = 0;
  for (const Copy& copy : c.copies()) {
    for_each_subset_of_size<EdgeId>(std::span<const EdgeId>(copy.edges), static_cast<std::size_t>(i),
                                    [&](std::span<const EdgeId> sub) {
                                      auto& n = counts[std::vector<EdgeId>(sub.begin(), sub.end())];
                                      best = std::max(best, ++n);
                                    });
  }
  return {best, false};
}

std::vector<std::size_t> delta_table(const CopyCollection& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= c.pattern().num_edges(); ++i) out.push_back(delta_i(c, static_cast<int>(i)).value);
  return out;
}

bool verify_copy(const Hypergraph& host, const Hypergraph& pattern, const Copy& copy) {
  if (copy.embedding.size() != pattern.num_vertices()) return false;
  std::vector<Vertex> seen = copy.embedding;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (!seen.empty() && seen.back() >= host.num_vertices()) return false;
  std::vector<EdgeId> images;
  for (const auto& e : pattern.edges()) {
    VertexSet mapped;
    for (Vertex v : e) mapped.push_back(copy.embedding[v]);
    std::sort(mapped.begin(), mapped.end());
    const auto id = host.find_edge(mapped);
    if (!id) return false;
    images.push_back(*id);
  }
  std::sort(images.begin(), images.end());
  std::vector<EdgeId> claimed = copy.edges;
  std::sort(claimed.begin(), claimed.end());
  return images == claimed;
}

}  // namespace hyperturan
