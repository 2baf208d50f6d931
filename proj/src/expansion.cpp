// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/expansion.hpp"

#include "hyperturan/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>

namespace hyperturan {

Vertex expansion_vertex(std::size_t n, int r0, int r, EdgeId edge, int slot) {
  return static_cast<Vertex>(n + static_cast<std::size_t>(edge) * static_cast<std::size_t>(r - r0) +
                             static_cast<std::size_t>(slot));
}

Hypergraph expand(const Hypergraph& f, int r) {
  const int r0 = f.uniformity();
  if (r < r0) throw ParameterError("cannot expand a " + std::to_string(r0) + "-graph to uniformity " + std::to_string(r));
  const std::size_t n = f.num_vertices();
  const std::size_t extra = static_cast<std::size_t>(r - r0) * f.num_edges();
  std::vector<VertexSet> edges;
  edges.reserve(f.num_edges());
  for (std::size_t k = 0; k < f.num_edges(); ++k) {
    VertexSet e = f.edge(static_cast<EdgeId>(k));
    for (int q = 0; q < r - r0; ++q) e.push_back(expansion_vertex(n, r0, r, static_cast<EdgeId>(k), q));
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, n + extra, std::move(edges));
}

DensityReport r_density(const Hypergraph& f) {
  const std::size_t m = f.num_edges();
  if (m < 2) throw UndefinedDensityError("r-density needs at least two edges, got " + std::to_string(m));
  if (m > kMaxDensityEdges) {
    throw ParameterError("exhaustive r-density is limited to " + std::to_string(kMaxDensityEdges) + " edges, got " +
                         std::to_string(m));
  }
  const long long r = f.uniformity();
  std::vector<int> count(f.num_vertices(), 0);
  long long vertices = 0;
  long long edges = 0;
  long long best_num = -1;
  long long best_den = 1;
  std::uint64_t best_mask = 0;
  std::uint64_t examined = 0;
  const std::uint64_t total = 1ULL << m;
  // Gray-code walk: step i toggles edge ctz(i).
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = __builtin_ctzll(i);
    const std::uint64_t mask = i ^ (i >> 1);
    const bool added = (mask >> bit) & 1ULL;
    for (Vertex v : f.edge(static_cast<EdgeId>(bit))) {
      if (added) {
        if (count[v]++ == 0) ++vertices;
      } else {
        if (--count[v] == 0) --vertices;
      }
    }
    edges += added ? 1 : -1;
    if (edges < 2) continue;
    ++examined;
    const long long num = edges - 1;
    const long long den = vertices - r;
    const long long lhs = num * best_den;
    const long long rhs = best_num * den;
    if (best_num < 0 || lhs > rhs || (lhs == rhs && mask < best_mask)) {
      best_num = num;
      best_den = den;
      best_mask = mask;
    }
  }
  DensityReport report;
  report.density = Rational(best_num, best_den);
  for (std::size_t e = 0; e < m; ++e) {
    if ((best_mask >> e) & 1ULL) report.optimal_edges.push_back(static_cast<EdgeId>(e));
  }
  report.optimal_vertices = static_cast<std::size_t>(best_den + r);
  report.examined = examined;
  return report;
}

Rational expanded_density(const Rational& core_density, int r0, int r) {
  if (r < r0) throw ParameterError("expansion uniformity below the core uniformity");
  if (core_density <= 0) throw ParameterError("density must be positive");
  return Rational(1) / (Rational(r - r0) + Rational(1) / core_density);
}

DensityReport pattern_density(const PatternInfo& pattern, int r) {
  const Hypergraph& g = pattern.graph;
  if (g.num_edges() <= kMaxDensityEdges) return r_density(expand(g, r));
  if (!pattern.density) {
    throw ParameterError("pattern " + pattern.name + " is too large for exhaustive density and has no closed form");
  }
  DensityReport report;
  report.density = expanded_density(*pattern.density, g.uniformity(), r);
  report.method = "closed-form";
  for (std::size_t e = 0; e < g.num_edges(); ++e) report.optimal_edges.push_back(static_cast<EdgeId>(e));
  report.optimal_vertices = g.num_non_isolated() + static_cast<std::size_t>(r - g.uniformity()) * g.num_edges();
  return report;
}

DensityRelation check_density_relation(const Hypergraph& f, int r) {
  const int r0 = f.uniformity();
  if (r < r0) throw ParameterError("r must be at least the uniformity of F");
  DensityRelation rel;
  rel.r0 = r0;
  rel.r = r;
  rel.core_density = r_density(f).density;
  rel.expanded = r_density(expand(f, r)).density;
  rel.lhs = Rational(1) / rel.expanded;
  rel.rhs = Rational(r - r0) + Rational(1) / rel.core_density;
  rel.holds = rel.lhs == rel.rhs;
  rel.strict_bound = r == r0 || rel.expanded < Rational(1, r - r0);
  return rel;
}

namespace {

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet without(const VertexSet& s, Vertex v) {
  VertexSet out;
  for (Vertex u : s) {
    if (u != v) out.push_back(u);
  }
  return out;
}

}  // namespace

bool validate_certificate(const TightTreeCertificate& c) {
  const std::size_t t = c.edges.size();
  if (t == 0 || c.new_vertex.size() != t || c.witness.size() != t || c.r < 1) return false;
  std::set<VertexSet> distinct;
  std::set<Vertex> covered;
  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet& e = c.edges[i];
    if (static_cast<int>(e.size()) != c.r || !std::is_sorted(e.begin(), e.end()) ||
        std::adjacent_find(e.begin(), e.end()) != e.end() || !distinct.insert(e).second) {
      return false;
    }
    if (i > 0) {
      const Vertex v = c.new_vertex[i];
      if (!std::binary_search(e.begin(), e.end(), v) || covered.count(v)) return false;
      if (c.witness[i] >= i || !is_subset(without(e, v), c.edges[c.witness[i]])) return false;
    }
    covered.insert(e.begin(), e.end());
  }
  return true;
}

bool certificate_spans(const TightTreeCertificate& c, const Hypergraph& f) {
  std::set<Vertex> tree_vertices;
  for (const auto& e : c.edges) tree_vertices.insert(e.begin(), e.end());
  const auto fv = f.non_isolated_vertices();
  if (std::set<Vertex>(fv.begin(), fv.end()) != tree_vertices) return false;
  for (const auto& e : f.edges()) {
    if (std::none_of(c.edges.begin(), c.edges.end(), [&](const VertexSet& h) { return is_subset(e, h); })) return false;
  }
  return true;
}

namespace {

bool connected(const Hypergraph& h) {
  const std::size_t m = h.num_edges();
  if (m == 0) return false;
  std::vector<char> seen(m, 0);
  std::vector<EdgeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const EdgeId e = stack.back();
    stack.pop_back();
    for (Vertex v : h.edge(e)) {
      for (EdgeId f : h.incident(v)) {
        if (!seen[f]) {
          seen[f] = 1;
          ++reached;
          stack.push_back(f);
        }
      }
    }
  }
  return reached == m;
}

std::optional<TightTreeCertificate> peel(const Hypergraph& t) {
  const std::size_t m = t.num_edges();
  std::vector<char> alive(m, 1);
  std::vector<std::size_t> degree(t.num_vertices());
  for (std::size_t v = 0; v < t.num_vertices(); ++v) degree[v] = t.degree(static_cast<Vertex>(v));
  struct Removal {
    EdgeId edge;
    Vertex leaf;
    EdgeId host;
  };
  std::vector<Removal> removed;
  for (std::size_t left = m; left > 1; --left) {
    bool progress = false;
    for (std::size_t e = 0; e < m && !progress; ++e) {
      if (!alive[e]) continue;
      for (Vertex v : t.edge(static_cast<EdgeId>(e))) {
        if (degree[v] != 1) continue;
        const VertexSet rest = without(t.edge(static_cast<EdgeId>(e)), v);
        for (std::size_t g = 0; g < m; ++g) {
          if (g == e || !alive[g] || !is_subset(rest, t.edge(static_cast<EdgeId>(g)))) continue;
          removed.push_back({static_cast<EdgeId>(e), v, static_cast<EdgeId>(g)});
          alive[e] = 0;
          for (Vertex u : t.edge(static_cast<EdgeId>(e))) --degree[u];
          progress = true;
          break;
        }
        if (progress) break;
      }
    }
    if (!progress) return std::nullopt;
  }
  TightTreeCertificate c;
  c.r = t.uniformity();
  std::vector<std::size_t> position(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    if (alive[e]) {
      position[e] = 0;
      c.edges.push_back(t.edge(static_cast<EdgeId>(e)));
      c.new_vertex.push_back(0);
      c.witness.push_back(0);
    }
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    position[it->edge] = c.edges.size();
    c.edges.push_back(t.edge(it->edge));
    c.new_vertex.push_back(it->leaf);
    c.witness.push_back(position[it->host]);
  }
  return c;
}

class OrderSearch {
 public:
  explicit OrderSearch(const Hypergraph& t) : t_(t), placed_(t.num_edges(), 0), count_(t.num_vertices(), 0) {}

  std::optional<TightTreeCertificate> run() {
    for (std::size_t first = 0; first < t_.num_edges(); ++first) {
      push(first, 0, 0);
      if (dfs()) return build();
      pop();
    }
    return std::nullopt;
  }

 private:
  std::string key() const { return std::string(placed_.begin(), placed_.end()); }

  void push(std::size_t e, Vertex v, std::size_t witness) {
    placed_[e] = 1;
    for (Vertex u : t_.edge(static_cast<EdgeId>(e))) ++count_[u];
    order_.push_back(e);
    leaf_.push_back(v);
    witness_.push_back(witness);
  }

  void pop() {
    const std::size_t e = order_.back();
    placed_[e] = 0;
    for (Vertex u : t_.edge(static_cast<EdgeId>(e))) --count_[u];
    order_.pop_back();
    leaf_.pop_back();
    witness_.pop_back();
  }

  bool dfs() {
    if (order_.size() == t_.num_edges()) return true;
    if (failed_.count(key())) return false;
    for (std::size_t e = 0; e < t_.num_edges(); ++e) {
      if (placed_[e]) continue;
      const VertexSet& edge = t_.edge(static_cast<EdgeId>(e));
      Vertex fresh = 0;
      int fresh_count = 0;
      for (Vertex u : edge) {
        if (count_[u] == 0) {
          fresh = u;
          ++fresh_count;
        }
      }
      if (fresh_count != 1) continue;
      const VertexSet rest = without(edge, fresh);
      for (std::size_t pos = 0; pos < order_.size(); ++pos) {
        if (!is_subset(rest, t_.edge(static_cast<EdgeId>(order_[pos])))) continue;
        push(e, fresh, pos);
        if (dfs()) return true;
        pop();
        break;
      }
    }
    failed_.insert(key());
    return false;
  }

  TightTreeCertificate build() const {
    TightTreeCertificate c;
    c.r = t_.uniformity();
    for (std::size_t i = 0; i < order_.size(); ++i) {
      c.edges.push_back(t_.edge(static_cast<EdgeId>(order_[i])));
      c.new_vertex.push_back(leaf_[i]);
      c.witness.push_back(witness_[i]);
    }
    return c;
  }

  const Hypergraph& t_;
  std::vector<char> placed_;
  std::vector<int> count_;
  std::vector<std::size_t> order_;
  std::vector<Vertex> leaf_;
  std::vector<std::size_t> witness_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<TightTreeCertificate> is_tight_tree(const Hypergraph& t) {
  if (t.num_edges() == 0) return std::nullopt;
  if (t.num_edges() == 1) {
    TightTreeCertificate c;
    c.r = t.uniformity();
    c.edges = {t.edge(0)};
    c.new_vertex = {0};
    c.witness = {0};
    return c;
  }
  if (!connected(t)) return std::nullopt;
  if (auto c = peel(t); c && validate_certificate(*c)) return c;
  auto c = OrderSearch(t).run();
  if (c && !validate_certificate(*c)) throw InvariantError("order search produced an invalid certificate");
  return c;
}

namespace {

// Tight r0-trees on exactly the vertices `verts` whose edges cover every edge
// of f; depth-first over trees grown one new vertex at a time.
class HypothesisSearch {
 public:
  HypothesisSearch(const Hypergraph& f, int r0, std::vector<Vertex> verts)
      : f_(f), r0_(r0), verts_(std::move(verts)) {}

  std::optional<std::vector<VertexSet>> run() {
    if (static_cast<int>(verts_.size()) < r0_) return std::nullopt;
    std::optional<std::vector<VertexSet>> found;
    for_each_subset_of_size<Vertex>(std::span<const Vertex>(verts_), static_cast<std::size_t>(r0_),
                                    [&](std::span<const Vertex> s) {
                                      if (found) return;
                                      tree_ = {VertexSet(s.begin(), s.end())};
                                      covered_ = std::set<Vertex>(s.begin(), s.end());
                                      if (grow()) found = tree_;
                                    });
    return found;
  }

 private:
  bool covered_edge(const VertexSet& e) const {
    return std::any_of(tree_.begin(), tree_.end(), [&](const VertexSet& h) { return is_subset(e, h); });
  }

  bool dead() const {
    for (const auto& e : f_.edges()) {
      const bool inside = std::all_of(e.begin(), e.end(), [&](Vertex v) { return covered_.count(v) > 0; });
      if (inside && !covered_edge(e)) return true;
    }
    return false;
  }

  bool grow() {
    if (dead()) return false;
    if (covered_.size() == verts_.size()) return true;
    std::set<VertexSet> tried;
    for (std::size_t s = 0; s < tree_.size(); ++s) {
      const VertexSet base = tree_[s];
      for (Vertex v : verts_) {
        if (covered_.count(v)) continue;
        for (Vertex drop : base) {
          VertexSet h = without(base, drop);
          h.push_back(v);
          std::sort(h.begin(), h.end());
          if (!tried.insert(h).second) continue;
          tree_.push_back(h);
          covered_.insert(v);
          if (grow()) return true;
          covered_.erase(v);
          tree_.pop_back();
        }
      }
    }
    return false;
  }

  const Hypergraph& f_;
  int r0_;
  std::vector<Vertex> verts_;
  std::vector<VertexSet> tree_;
  std::set<Vertex> covered_;
};

struct GoodState {
  int uniformity;  // size of the tree edges
  int level;       // expansion level of f covered by the tree
  TightTreeCertificate cert;
};

// F^(level) edge j under the final labels of expand(f, r).
VertexSet level_edge(const Hypergraph& f, int r, int level, EdgeId j) {
  VertexSet e = f.edge(j);
  for (int q = 0; q < level - f.uniformity(); ++q) e.push_back(expansion_vertex(f.num_vertices(), f.uniformity(), r, j, q));
  std::sort(e.begin(), e.end());
  return e;
}

// (R, l)-good -> (R, l+1)-good.
void raise_level(GoodState& s, const Hypergraph& f, int r) {
  const int level = s.level;
  const std::size_t original = s.cert.edges.size();
  for (std::size_t j = 0; j < f.num_edges(); ++j) {
    const VertexSet e = level_edge(f, r, level, static_cast<EdgeId>(j));
    const Vertex fresh = expansion_vertex(f.num_vertices(), f.uniformity(), r, static_cast<EdgeId>(j), level - f.uniformity());
    std::size_t host = original;
    for (std::size_t i = 0; i < original; ++i) {
      if (is_subset(e, s.cert.edges[i])) {
        host = i;
        break;
      }
    }
    if (host == original) throw InvariantError("expanded edge not covered by the tree");
    VertexSet h = e;
    int need = s.uniformity - 1 - level;
    for (Vertex u : s.cert.edges[host]) {
      if (need == 0) break;
      if (!std::binary_search(e.begin(), e.end(), u)) {
        h.push_back(u);
        --need;
      }
    }
    h.push_back(fresh);
    std::sort(h.begin(), h.end());
    s.cert.edges.push_back(std::move(h));
    s.cert.new_vertex.push_back(fresh);
    s.cert.witness.push_back(host);
  }
  s.level = level + 1;
}

// (R, R)-good -> (R+1, R)-good: h'_i = h_{i'} + v_i for i >= 1.
void raise_uniformity(GoodState& s) {
  const auto& old = s.cert;
  if (old.edges.size() < 2) throw InvariantError("uniformity step needs at least two tree edges");
  TightTreeCertificate next;
  next.r = s.uniformity + 1;
  for (std::size_t i = 1; i < old.edges.size(); ++i) {
    VertexSet h = old.edges[old.witness[i]];
    h.push_back(old.new_vertex[i]);
    std::sort(h.begin(), h.end());
    next.edges.push_back(std::move(h));
    if (i == 1) {
      next.new_vertex.push_back(0);
      next.witness.push_back(0);
    } else {
      next.new_vertex.push_back(old.new_vertex[i]);
      next.witness.push_back(old.witness[i] == 0 ? 0 : old.witness[i] - 1);
    }
  }
  s.cert = std::move(next);
  s.uniformity += 1;
}

}  // namespace

TightTreeCertificate spanning_tight_tree(const Hypergraph& f, int r, const std::optional<std::vector<VertexSet>>& hint) {
  const int k = f.uniformity();
  if (r < k) throw ParameterError("target uniformity below the pattern uniformity");
  if (f.num_edges() == 0) throw ParameterError("pattern has no edges");
  if (f.num_non_isolated() != f.num_vertices()) throw PreconditionError("pattern has isolated vertices");
  const Hypergraph target = expand(f, r);
  if (f.num_edges() == 1) {
    TightTreeCertificate c;
    c.r = r;
    c.edges = {target.edge(0)};
    c.new_vertex = {0};
    c.witness = {0};
    return c;
  }

  std::optional<std::vector<VertexSet>> base;
  if (hint) {
    if (hint->empty()) throw ParameterError("empty tree hint");
    const int r0 = static_cast<int>(hint->front().size());
    if (r0 < k || r0 > r) throw NotApplicableError("tree hint uniformity " + std::to_string(r0) + " is outside [k, r]");
    base = hint;
  } else if (f.num_vertices() <= 8) {
    std::vector<Vertex> verts = f.non_isolated_vertices();
    for (int r0 = k; r0 <= std::min(k + 1, r) && !base; ++r0) base = HypothesisSearch(f, r0, verts).run();
  }
  if (!base) throw NotApplicableError("no tight tree hypothesis found for this pattern");

  const int r0 = static_cast<int>(base->front().size());
  const Hypergraph tprime(r0, f.num_vertices(), *base);
  auto start = is_tight_tree(tprime);
  if (!start) throw NotApplicableError("tree hint is not a tight tree");
  if (!certificate_spans(*start, f)) throw NotApplicableError("tree hint does not contain the pattern spanningly");

  GoodState state{r0, k, *start};
  while (state.level < state.uniformity) raise_level(state, f, r);
  while (state.uniformity < r) {
    raise_uniformity(state);
    raise_level(state, f, r);
  }
  if (!validate_certificate(state.cert) || !certificate_spans(state.cert, target)) {
    throw InvariantError("constructed tight tree failed validation");
  }
  return state.cert;
}

}  // namespace hyperturan
