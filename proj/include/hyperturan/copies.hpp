// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/hypergraph.hpp"

#include <cstddef>
#include <limits>
#include <memory>
#include <unordered_set>
#include <vector>

namespace hyperturan {

/// One copy of a pattern inside a host: the host edge ids it uses (sorted)
/// and the embedding pattern vertex -> host vertex that witnesses it.
struct Copy {
  std::vector<EdgeId> edges;
  std::vector<Vertex> embedding;
};

struct EdgeIdsHash {
  std::size_t operator()(const std::vector<EdgeId>& ids) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (EdgeId e : ids) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Copies of `pattern` in `host`, identified by their host edge sets. The
/// pattern is stored without isolated vertices, so every embedding covers
/// the whole stored pattern.
class CopyCollection {
 public:
  CopyCollection(std::shared_ptr<const Hypergraph> host, std::shared_ptr<const Hypergraph> pattern);

  [[nodiscard]] const Hypergraph& host() const noexcept { return *host_; }
  [[nodiscard]] const Hypergraph& pattern() const noexcept { return *pattern_; }
  [[nodiscard]] std::shared_ptr<const Hypergraph> host_ptr() const noexcept { return host_; }
  [[nodiscard]] std::shared_ptr<const Hypergraph> pattern_ptr() const noexcept { return pattern_; }

  [[nodiscard]] const std::vector<Copy>& copies() const noexcept { return copies_; }
  [[nodiscard]] std::size_t size() const noexcept { return copies_.size(); }
  [[nodiscard]] bool empty() const noexcept { return copies_.empty(); }
  [[nodiscard]] bool contains(const std::vector<EdgeId>& sorted_edges) const { return index_.count(sorted_edges) > 0; }

  /// Adds a copy unless one with the same edge set is present. The edge list
  /// is sorted on insertion. Returns true when the copy was new.
  bool insert(Copy copy);
  /// Keeps the copies whose positions are listed (ascending or not).
  [[nodiscard]] CopyCollection subset(const std::vector<std::size_t>& keep) const;

  bool truncated = false;

 private:
  std::shared_ptr<const Hypergraph> host_;
  std::shared_ptr<const Hypergraph> pattern_;
  std::vector<Copy> copies_;
  std::unordered_set<std::vector<EdgeId>, EdgeIdsHash> index_;
};

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// All copies of F in H (up to `cap`) by backtracking over an edge order of F
/// in which every edge after the first of its component meets an earlier one.
/// Deterministic. When more than `cap` copies exist the first `cap` are kept
/// and `truncated` is set.
CopyCollection enumerate_copies(std::shared_ptr<const Hypergraph> host, const Hypergraph& pattern,
                                std::size_t cap = kNoCap);
CopyCollection enumerate_copies(const Hypergraph& host, const Hypergraph& pattern, std::size_t cap = kNoCap);

/// True when H contains at least one copy of F.
bool contains_copy(const Hypergraph& host, const Hypergraph& pattern);

struct DeltaValue {
  std::size_t value = 0;
  bool no_copies = false;
};

/// Largest number of copies containing a fixed set of i host edges.
DeltaValue delta_i(const CopyCollection& c, int i);
/// delta_i for i = 1..|pattern|; entry k holds Delta_{k+1}.
std::vector<std::size_t> delta_table(const CopyCollection& c);

/// Independent re-check that `copy` is an isomorphic image of the pattern:
/// the embedding is injective, maps each pattern edge onto a host edge, and
/// those host edges are exactly copy.edges.
bool verify_copy(const Hypergraph& host, const Hypergraph& pattern, const Copy& copy);

}  // namespace hyperturan
