// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/regularize.hpp"

#include "hyperturan/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

namespace hyperturan {

namespace {

using DegreeMap = std::unordered_map<VertexSet, std::size_t, VertexSetHash>;

void require_partite(const Hypergraph& h) {
  if (h.empty()) throw DegenerateInputError("hypergraph has no edges");
  if (!h.has_partition() || !h.is_partite()) throw ParameterError("hypergraph must be partite with a partition");
}

// Vertex of e in each part, indexed by part.
std::vector<Vertex> by_part(const Hypergraph& h, const VertexSet& e) {
  std::vector<Vertex> out(e.size());
  for (Vertex v : e) out[h.part_of(v)] = v;
  return out;
}

VertexSet restrict(const std::vector<Vertex>& parts, unsigned mask) {
  VertexSet s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (mask >> i & 1U) s.push_back(parts[i]);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<DegreeMap> degree_maps(const Hypergraph& h, const std::vector<char>& alive) {
  const unsigned masks = 1U << h.uniformity();
  std::vector<DegreeMap> deg(masks);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (!alive[e]) continue;
    const auto parts = by_part(h, h.edge(static_cast<EdgeId>(e)));
    for (unsigned m = 0; m < masks; ++m) ++deg[m][restrict(parts, m)];
  }
  return deg;
}

double formula_log(const Hypergraph& h) { return std::log2(static_cast<double>(std::max<std::size_t>(h.num_vertices(), 2))); }

}  // namespace

RegularizedSlice superregularize(const Hypergraph& h, const SuperregularizeOptions& options) {
  require_partite(h);
  const int r = h.uniformity();
  if (r > 8) throw ParameterError("superregularize supports r <= 8");
  const unsigned masks = 1U << r;
  const std::size_t m = h.num_edges();

  // (1) type vectors.
  std::vector<char> all(m, 1);
  const auto deg = degree_maps(h, all);
  std::vector<std::vector<int>> type(m, std::vector<int>(masks));
  std::vector<std::set<int>> seen_levels(masks);
  for (std::size_t e = 0; e < m; ++e) {
    const auto parts = by_part(h, h.edge(static_cast<EdgeId>(e)));
    for (unsigned mask = 0; mask < masks; ++mask) {
      const int y = static_cast<int>(std::bit_width(deg[mask].at(restrict(parts, mask))));
      type[e][mask] = y;
      seen_levels[mask].insert(y);
    }
  }
  int levels = 1;
  for (const auto& s : seen_levels) levels = std::max(levels, static_cast<int>(s.size()));

  // (2) largest bucket, ties to the lexicographically smallest type.
  std::map<std::vector<int>, std::vector<EdgeId>> buckets;
  for (std::size_t e = 0; e < m; ++e) buckets[type[e]].push_back(static_cast<EdgeId>(e));
  auto best = buckets.begin();
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    if (it->second.size() > best->second.size()) best = it;
  }
  std::vector<std::uint64_t> delta(masks);
  for (unsigned mask = 0; mask < masks; ++mask) delta[mask] = 1ULL << best->first[mask];

  RegularizedSlice slice;
  slice.levels = levels;
  slice.types = buckets.size();
  slice.input_edges = m;
  slice.bucket_edges = best->second.size();

  // (3) prune shadows whose positive degree falls below the threshold.
  const Rational scale = options.threshold_scale / pow_int(Rational(2 * levels), 1LL << r);
  std::vector<char> alive(m, 0);
  for (EdgeId e : best->second) alive[e] = 1;
  while (true) {
    const auto cur = degree_maps(h, alive);
    std::vector<std::unordered_map<VertexSet, char, VertexSetHash>> doomed(masks);
    bool any = false;
    for (unsigned mask = 0; mask < masks; ++mask) {
      const Rational threshold = scale * Rational(delta[mask]);
      for (const auto& [s, d] : cur[mask]) {
        if (d > 0 && Rational(d) < threshold) {
          doomed[mask][s] = 1;
          any = true;
        }
      }
    }
    if (!any) break;
    ++slice.prune_passes;
    for (std::size_t e = 0; e < m; ++e) {
      if (!alive[e]) continue;
      const auto parts = by_part(h, h.edge(static_cast<EdgeId>(e)));
      for (unsigned mask = 0; mask < masks; ++mask) {
        if (!doomed[mask].empty() && doomed[mask].count(restrict(parts, mask))) {
          alive[e] = 0;
          ++slice.pruned;
          break;
        }
      }
    }
  }
  std::vector<EdgeId> kept;
  for (std::size_t e = 0; e < m; ++e) {
    if (alive[e]) kept.push_back(static_cast<EdgeId>(e));
  }
  if (kept.empty()) throw InvariantError("pruning removed every edge");

  // (4) drop isolated vertices.
  const Hypergraph pruned = h.edge_subgraph(kept).without_isolated(&slice.original);
  const auto final_deg = degree_maps(pruned, std::vector<char>(pruned.num_edges(), 1));
  std::vector<std::size_t> count(masks), min_deg(masks);
  for (unsigned mask = 0; mask < masks; ++mask) {
    count[mask] = final_deg[mask].size();
    std::size_t lo = SIZE_MAX;
    for (const auto& [s, d] : final_deg[mask]) lo = std::min(lo, d);
    min_deg[mask] = lo;
  }

  // (5) greedy relabeling: grow the prefix by the part maximizing its shadow count.
  std::vector<int> order;
  unsigned prefix = 0;
  for (int k = 0; k < r; ++k) {
    int pick = -1;
    for (int j = 0; j < r; ++j) {
      if (prefix >> j & 1U) continue;
      if (pick < 0 || count[prefix | 1U << j] > count[prefix | 1U << pick]) pick = j;
    }
    order.push_back(pick);
    prefix |= 1U << pick;
  }
  slice.part_order = order;
  std::vector<int> new_part(r);
  for (int i = 0; i < r; ++i) new_part[order[i]] = i;
  auto to_new = [&](unsigned mask) {
    unsigned out = 0;
    for (int j = 0; j < r; ++j) {
      if (mask >> j & 1U) out |= 1U << new_part[j];
    }
    return out;
  };
  slice.delta.assign(masks, 0);
  slice.shadow_count.assign(masks, 0);
  slice.min_degree.assign(masks, 0);
  for (unsigned mask = 0; mask < masks; ++mask) {
    slice.delta[to_new(mask)] = delta[mask];
    slice.shadow_count[to_new(mask)] = count[mask];
    slice.min_degree[to_new(mask)] = min_deg[mask];
  }
  std::vector<int> partition(pruned.num_vertices());
  for (std::size_t v = 0; v < partition.size(); ++v) partition[v] = new_part[pruned.part_of(static_cast<Vertex>(v))];
  slice.subgraph = pruned.with_partition(std::move(partition));

  slice.slack = Rational(1);
  for (unsigned mask = 0; mask < masks; ++mask) {
    slice.slack = std::min(slice.slack, Rational(slice.min_degree[mask], slice.delta[mask]));
  }
  const double logn = formula_log(h);
  const double base = 2.0 * r * logn;
  slice.formula_slack = std::pow(base, -static_cast<double>(1U << r));
  slice.formula_slack_applies = slice.formula_slack <= 1.0;

  const double edges = static_cast<double>(slice.subgraph.num_edges());
  const double verts = static_cast<double>(slice.subgraph.num_vertices());
  for (int k = 1; k <= r; ++k) {
    ChainEntry c;
    c.k = k;
    const unsigned mask = (1U << k) - 1;
    c.shadows = slice.shadow_count[mask];
    const double frac = r == 1 ? 0.0 : static_cast<double>(r - k) / (r - 1);
    const double pw = static_cast<double>(1U << r);
    c.shadow_target = std::pow(verts, frac) * std::pow(edges, r == 1 ? 0.0 : static_cast<double>(k - 1) / (r - 1)) *
                      std::pow(base, -k * pw);
    c.shadow_met = static_cast<double>(c.shadows) >= c.shadow_target;
    c.delta_target = std::pow(edges / verts, frac) * std::pow(2.0 * r * std::pow(logn, k + 1), pw);
    c.delta_met = static_cast<double>(slice.delta[mask]) <= c.delta_target;
    slice.chain.push_back(c);
  }
  return slice;
}

Dichotomy dichotomize(const Hypergraph& h, const Rational& threshold) {
  require_partite(h);
  const int r = h.uniformity();
  if (r < 2) throw ParameterError("dichotomize needs r >= 2");
  const std::size_t m = h.num_edges();
  const Rational n(h.num_vertices());
  const Rational floor_level = Rational(m) / (4 * pow_int(n, r - 1));
  if (!(floor_level < threshold && threshold <= n)) {
    throw ParameterError("threshold A = " + to_string(threshold) + " must satisfy " + to_string(floor_level) +
                         " < A <= " + to_string(n));
  }
  const std::size_t cap = static_cast<std::size_t>(floor(threshold));

  // Each edge has one (r-1)-subset per missing part.
  std::unordered_map<VertexSet, std::vector<EdgeId>, VertexSetHash> through;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> deg;
  auto sub_shadows = [&](EdgeId e) {
    const auto parts = by_part(h, h.edge(e));
    std::vector<VertexSet> out;
    for (int j = 0; j < r; ++j) out.push_back(restrict(parts, ((1U << r) - 1) & ~(1U << j)));
    return out;
  };
  for (std::size_t e = 0; e < m; ++e) {
    for (auto& s : sub_shadows(static_cast<EdgeId>(e))) {
      through[s].push_back(static_cast<EdgeId>(e));
      ++deg[s];
    }
  }
  std::set<VertexSet> candidates;
  for (const auto& [s, d] : deg) {
    if (d <= cap) candidates.insert(s);
  }

  std::vector<char> alive(m, 1);
  std::map<std::pair<std::vector<int>, int>, std::vector<EdgeId>> buckets;
  Dichotomy out;
  out.threshold = threshold;
  while (!candidates.empty()) {
    const VertexSet sigma = *candidates.begin();
    candidates.erase(candidates.begin());
    const std::size_t d = deg[sigma];
    std::vector<int> parts;
    for (Vertex v : sigma) parts.push_back(h.part_of(v));
    std::sort(parts.begin(), parts.end());
    auto& bucket = buckets[{parts, static_cast<int>(std::bit_width(d))}];
    ++out.removals;
    for (EdgeId e : through[sigma]) {
      if (!alive[e]) continue;
      alive[e] = 0;
      bucket.push_back(e);
      for (auto& s : sub_shadows(e)) {
        const std::size_t left = --deg[s];
        if (left == 0) {
          candidates.erase(s);
        } else if (left <= cap) {
          candidates.insert(s);
        }
      }
    }
  }

  std::vector<EdgeId> leftover;
  for (std::size_t e = 0; e < m; ++e) {
    if (alive[e]) leftover.push_back(static_cast<EdgeId>(e));
  }
  out.leftover = leftover.size();
  for (const auto& [key, edges] : buckets) out.buckets.push_back({key.first, key.second, edges.size()});

  if (2 * leftover.size() >= m) {
    out.tag = DichotomyTag::AllLarge;
    out.edges = leftover;
    out.subgraph = h.edge_subgraph(leftover);
    out.part_order.resize(r);
    for (int i = 0; i < r; ++i) out.part_order[i] = i;
    out.size_bound_met = true;
    return out;
  }

  const std::pair<std::vector<int>, int>* pick = nullptr;
  std::size_t pick_size = 0;
  for (const auto& [key, edges] : buckets) {
    if (Rational(BigInt(1) << key.second) < floor_level) continue;
    if (!pick || edges.size() > pick_size) {
      pick = &key;
      pick_size = edges.size();
    }
  }
  if (!pick) throw InvariantError("no bucket reaches the dyadic floor |H|/(4 n^{r-1})");

  out.tag = DichotomyTag::Regular;
  out.level = pick->second;
  out.edges = buckets[*pick];
  std::sort(out.edges.begin(), out.edges.end());
  const Hypergraph chosen = h.edge_subgraph(out.edges);

  std::vector<int> order = pick->first;
  for (int j = 0; j < r; ++j) {
    if (std::find(pick->first.begin(), pick->first.end(), j) == pick->first.end()) order.push_back(j);
  }
  out.part_order = order;
  std::vector<int> new_part(r);
  for (int i = 0; i < r; ++i) new_part[order[i]] = i;
  std::vector<int> partition(h.num_vertices());
  for (std::size_t v = 0; v < partition.size(); ++v) partition[v] = new_part[h.part_of(static_cast<Vertex>(v))];
  out.subgraph = chosen.with_partition(std::move(partition));

  const Rational top(BigInt(1) << out.level);
  out.bound = std::min(top, threshold);
  std::size_t largest = 0;
  for (const auto& e : out.subgraph.edges()) {
    const auto parts = by_part(out.subgraph, e);
    largest = std::max(largest, codegree(out.subgraph, restrict(parts, (1U << (r - 1)) - 1)));
  }
  if (Rational(largest) >= out.bound) {
    if (threshold < 2) throw DegenerateInputError("codegree equals A < 2; no strict sandwich bound exists");
    out.bound = threshold + 1;
    out.clamped = true;
  }
  const double logn = formula_log(h);
  out.size_bound_met = static_cast<double>(out.edges.size()) >= static_cast<double>(m) / (4.0 * r * logn);
  return out;
}

}  // namespace hyperturan
