// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/rturan.hpp"

#include "hyperturan/copies.hpp"
#include "hyperturan/error.hpp"
#include "hyperturan/expansion.hpp"
#include "hyperturan/patterns.hpp"
#include "hyperturan/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

namespace hyperturan {

namespace {

constexpr std::size_t kMaxExhaustiveDensityEdges = 24;

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw ParameterError("probability numerator or denominator exceeds 64 bits");
  }
  return x.convert_to<std::uint64_t>();
}

// Greedy cover: repeatedly takes the edge lying in the most live copies.
std::vector<EdgeId> greedy_cover(std::size_t num_edges, const std::vector<std::vector<EdgeId>>& copies) {
  std::vector<std::vector<std::size_t>> through(num_edges);
  for (std::size_t c = 0; c < copies.size(); ++c) {
    for (EdgeId e : copies[c]) through[e].push_back(c);
  }
  std::vector<std::size_t> live_count(num_edges, 0);
  for (std::size_t e = 0; e < num_edges; ++e) live_count[e] = through[e].size();
  std::vector<char> dead(copies.size(), 0);
  std::size_t remaining = copies.size();
  std::vector<EdgeId> cover;
  while (remaining > 0) {
    EdgeId best = 0;
    for (EdgeId e = 1; e < num_edges; ++e) {
      if (live_count[e] > live_count[best]) best = e;
    }
    cover.push_back(best);
    for (std::size_t c : through[best]) {
      if (dead[c]) continue;
      dead[c] = 1;
      --remaining;
      for (EdgeId e : copies[c]) --live_count[e];
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<std::vector<EdgeId>> copy_edge_sets(const Hypergraph& h, const Hypergraph& f) {
  const CopyCollection all = enumerate_copies(h, f);
  std::vector<std::vector<EdgeId>> sets;
  sets.reserve(all.size());
  for (const Copy& c : all.copies()) sets.push_back(c.edges);
  return sets;
}

std::vector<EdgeId> complement(std::size_t num_edges, const std::vector<EdgeId>& sorted_removed) {
  std::vector<EdgeId> kept;
  std::size_t j = 0;
  for (EdgeId e = 0; e < num_edges; ++e) {
    if (j < sorted_removed.size() && sorted_removed[j] == e) {
      ++j;
      continue;
    }
    kept.push_back(e);
  }
  return kept;
}

// Minimum hitting set by branch and bound. Branches on an unhit copy with
// the fewest allowed edges; the k-th branch takes its k-th allowed edge and
// forbids the earlier ones. Bound: a greedy family of unhit copies whose
// allowed edges are pairwise disjoint.
class HittingSet {
 public:
  HittingSet(std::size_t num_edges, const std::vector<std::vector<EdgeId>>& copies, std::uint64_t budget)
      : copies_(copies), budget_(budget), through_(num_edges), hits_(copies.size(), 0),
        forbidden_(num_edges, 0), mark_(num_edges, 0) {
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      for (EdgeId e : copies_[c]) through_[e].push_back(c);
    }
  }

  void solve(std::vector<EdgeId> incumbent) {
    best_ = std::move(incumbent);
    search();
  }

  [[nodiscard]] const std::vector<EdgeId>& best() const noexcept { return best_; }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] bool exhausted() const noexcept { return exhausted_; }

 private:
  void take(EdgeId e, int delta) {
    for (std::size_t c : through_[e]) hits_[c] += delta;
  }

  std::size_t allowed(std::size_t c) const {
    std::size_t k = 0;
    for (EdgeId e : copies_[c]) k += forbidden_[e] == 0;
    return k;
  }

  void search() {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::size_t pick = copies_.size();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> unhit;
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      if (hits_[c] > 0) continue;
      const std::size_t k = allowed(c);
      if (k == 0) return;
      unhit.push_back(c);
      if (k < fewest) {
        fewest = k;
        pick = c;
      }
    }
    if (unhit.empty()) {
      if (current_.size() < best_.size()) {
        best_ = current_;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    std::sort(unhit.begin(), unhit.end(), [&](std::size_t a, std::size_t b) { return allowed(a) < allowed(b); });
    std::size_t packing = 0;
    std::vector<EdgeId> marked;
    for (std::size_t c : unhit) {
      bool clash = false;
      for (EdgeId e : copies_[c]) clash = clash || (!forbidden_[e] && mark_[e]);
      if (clash) continue;
      ++packing;
      for (EdgeId e : copies_[c]) {
        if (!forbidden_[e]) {
          mark_[e] = 1;
          marked.push_back(e);
        }
      }
    }
    for (EdgeId e : marked) mark_[e] = 0;
    if (current_.size() + packing >= best_.size()) return;

    std::vector<EdgeId> tried;
    for (EdgeId e : copies_[pick]) {
      if (forbidden_[e]) continue;
      take(e, +1);
      current_.push_back(e);
      search();
      current_.pop_back();
      take(e, -1);
      forbidden_[e] = 1;
      tried.push_back(e);
      if (exhausted_) break;
    }
    for (EdgeId e : tried) forbidden_[e] = 0;
  }

  const std::vector<std::vector<EdgeId>>& copies_;
  std::uint64_t budget_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<int> hits_;
  std::vector<char> forbidden_;
  std::vector<char> mark_;
  std::vector<EdgeId> current_;
  std::vector<EdgeId> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size() / 2;
  return xs.size() % 2 ? xs[k] : (xs[k - 1] + xs[k]) / 2;
}

}  // namespace

Hypergraph sample_gnp(const SampleConfig& cfg) {
  if (cfg.r < 1 || cfg.n < static_cast<std::size_t>(cfg.r)) throw ParameterError("sampling needs n >= r >= 1");
  if (cfg.p <= 0 || cfg.p > 1) throw ParameterError("sampling needs 0 < p <= 1");
  const std::uint64_t num = to_u64(boost::multiprecision::numerator(cfg.p));
  const std::uint64_t den = to_u64(boost::multiprecision::denominator(cfg.p));
  const CounterRng rng(cfg.seed);
  std::vector<VertexSet> edges;
  std::uint64_t index = 0;
  for_each_combination(cfg.n, static_cast<std::size_t>(cfg.r), [&](std::span<const std::size_t> s) {
    if (rng.bernoulli(index++, num, den)) edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(cfg.r, cfg.n, std::move(edges));
}

ExtremalResult max_f_free(const Hypergraph& h, const Hypergraph& f, std::uint64_t budget) {
  if (h.uniformity() != f.uniformity()) throw ParameterError("host and pattern uniformities differ");
  const auto copies = copy_edge_sets(h, f);
  ExtremalResult result;
  result.copies = copies.size();
  std::vector<EdgeId> cover;
  if (copies.empty()) {
    result.optimal = true;
  } else {
    HittingSet search(h.num_edges(), copies, budget);
    search.solve(greedy_cover(h.num_edges(), copies));
    cover = search.best();
    result.nodes = search.nodes();
    result.optimal = !search.exhausted();
  }
  result.witness = complement(h.num_edges(), cover);
  result.value = result.witness.size();
  return result;
}

bool validate_extremal(const Hypergraph& h, const Hypergraph& f, const ExtremalResult& result) {
  if (result.witness.size() != result.value) return false;
  if (!std::is_sorted(result.witness.begin(), result.witness.end())) return false;
  if (contains_copy(h.edge_subgraph(result.witness), f)) return false;
  if (!result.optimal) return true;
  std::vector<EdgeId> kept = result.witness;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (std::binary_search(result.witness.begin(), result.witness.end(), e)) continue;
    kept.push_back(e);
    const bool blocked = contains_copy(h.edge_subgraph(kept), f);
    kept.pop_back();
    if (!blocked) return false;
  }
  return true;
}

DeletionBound deletion_lower_bound(const Hypergraph& h, const Hypergraph& f) {
  if (h.uniformity() != f.uniformity()) throw ParameterError("host and pattern uniformities differ");
  DeletionBound out;
  if (f.num_edges() >= 2 && f.num_edges() <= kMaxExhaustiveDensityEdges) {
    out.sub_pattern = r_density(f).optimal_edges;
  } else {
    for (EdgeId e = 0; e < f.num_edges(); ++e) out.sub_pattern.push_back(e);
  }
  const Hypergraph sub = f.edge_subgraph(out.sub_pattern);
  const auto copies = copy_edge_sets(h, sub);
  out.sub_copies = copies.size();
  const auto cover = copies.empty() ? std::vector<EdgeId>{} : greedy_cover(h.num_edges(), copies);
  out.deleted = cover.size();
  out.kept = complement(h.num_edges(), cover);
  return out;
}

StarBound star_lower_bound(std::size_t n, const Hypergraph& core, int r, std::size_t check_limit) {
  if (core.num_edges() == 0) throw ParameterError("core pattern has no edges");
  if (r < core.uniformity() || n < static_cast<std::size_t>(r)) throw ParameterError("star needs n >= r >= core uniformity");
  if (max_vertex_degree(core) >= core.num_edges()) {
    throw NotApplicableError("a vertex of the pattern lies in every edge, so a star can contain it");
  }
  std::vector<VertexSet> edges;
  for_each_combination(n - 1, static_cast<std::size_t>(r - 1), [&](std::span<const std::size_t> s) {
    VertexSet e{0};
    for (std::size_t v : s) e.push_back(static_cast<Vertex>(v + 1));
    edges.push_back(std::move(e));
  });
  StarBound out{Hypergraph(r, n, std::move(edges))};
  if (out.star.num_edges() <= check_limit) {
    out.checked = true;
    out.free = !contains_copy(out.star, expand(core, r));
  }
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("HYPERTURAN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult sweep(const SweepConfig& cfg) {
  if (cfg.core.num_edges() < 2) throw ParameterError("sweep needs a core pattern with at least two edges");
  if (cfg.p_grid.empty() || cfg.seeds.empty()) throw ParameterError("sweep needs a p grid and seeds");
  const Hypergraph pattern = expand(cfg.core, cfg.r);
  const bool star_applies = max_vertex_degree(cfg.core) < cfg.core.num_edges();

  SweepResult result;
  result.threads = cfg.threads > 0 ? cfg.threads : default_threads();
  const std::size_t cells = cfg.p_grid.size() * cfg.seeds.size();
  result.rows.resize(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    while (!failed) {
      const std::size_t k = next++;
      if (k >= cells) return;
      try {
        const auto start = std::chrono::steady_clock::now();
        SweepRow& row = result.rows[k];
        row.n = cfg.n;
        row.r = cfg.r;
        row.p = cfg.p_grid[k / cfg.seeds.size()];
        row.seed = cfg.seeds[k % cfg.seeds.size()];
        const Hypergraph h = sample_gnp({cfg.n, cfg.r, row.p, row.seed});
        row.edges = h.num_edges();
        const ExtremalResult ex = max_f_free(h, pattern, cfg.budget);
        row.exact = ex.optimal;
        row.ex_value = ex.value;
        row.nodes = ex.nodes;
        row.deletion_lb = deletion_lower_bound(h, pattern).kept.size();
        if (star_applies) row.star_lb = h.degree(0);
        row.millis = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(result.threads, cells));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SweepSummary& s = result.summary;
  s.density = expanded_density(r_density(cfg.core).density, cfg.core.uniformity(), cfg.r);
  const double n = static_cast<double>(cfg.n);
  s.threshold = std::pow(n, -1.0 / to_double(s.density));
  s.window_low = std::pow(n, -static_cast<double>(cfg.r));
  std::map<Rational, std::pair<std::vector<double>, std::vector<double>>> by_p;
  for (const auto& row : result.rows) {
    by_p[row.p].first.push_back(static_cast<double>(row.edges));
    by_p[row.p].second.push_back(static_cast<double>(row.ex_value));
  }
  double previous = -1;
  for (const auto& [p, values] : by_p) {
    SweepPoint point;
    point.p = p;
    point.median_edges = median(values.first);
    point.median_ex = median(values.second);
    const double x = to_double(p);
    point.sparse = x < s.threshold;
    point.in_window = x > s.window_low && x < s.threshold;
    s.window_empty = s.window_empty && !point.in_window;
    s.median_monotone = s.median_monotone && point.median_ex >= previous;
    previous = point.median_ex;
    s.points.push_back(point);
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_millis) {
  out << "n,r,p_num,p_den,seed,edges,exact_flag,ex_value,deletion_lb,star_lb,nodes,millis\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.r << ',' << boost::multiprecision::numerator(row.p) << ','
        << boost::multiprecision::denominator(row.p) << ',' << row.seed << ',' << row.edges << ','
        << (row.exact ? 1 : 0) << ',' << row.ex_value << ',' << row.deletion_lb << ',';
    if (row.star_lb) out << *row.star_lb;
    out << ',' << row.nodes << ',';
    if (with_millis) out << row.millis;
    out << '\n';
  }
}

}  // namespace hyperturan
