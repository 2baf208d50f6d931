// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/supersat.hpp"

#include "hyperturan/error.hpp"
#include "hyperturan/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hyperturan {

namespace {

std::string set_to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

template <typename T>
void shuffle(std::vector<T>& items, RngStream& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

std::vector<DeltaRow> balance_rows(const CopyCollection& c, const Rational& gamma, const Rational& tau) {
  const Rational m(static_cast<long long>(c.host().num_edges()));
  const Rational size(static_cast<long long>(c.size()));
  const auto table = delta_table(c);
  std::vector<DeltaRow> rows;
  for (std::size_t k = 0; k < table.size(); ++k) {
    DeltaRow row;
    row.i = static_cast<int>(k + 1);
    row.measured = table[k];
    row.bound = gamma * size / m * pow_int(tau / m, static_cast<long long>(k));
    row.holds = Rational(static_cast<long long>(row.measured)) <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

BalancedWitness verify_balanced(const CopyCollection& c, const Rational& gamma, const Rational& tau) {
  if (c.empty()) throw ParameterError("balancedness needs a non-empty copy collection");
  if (gamma <= 0 || tau <= 0) throw ParameterError("gamma and tau must be positive");
  if (c.host().num_edges() == 0) throw ParameterError("host has no edges");
  BalancedWitness w{c, gamma, tau, c.host().num_edges(), balance_rows(c, gamma, tau), false};
  w.verdict = std::all_of(w.rows.begin(), w.rows.end(), [](const DeltaRow& row) { return row.holds; });
  return w;
}

ShadowExpansion shadow_expand(std::shared_ptr<const Hypergraph> h, const CopyCollection& base, const Rational& low,
                              const Rational& high, const ShadowExpandOptions& options) {
  const Hypergraph& host = *h;
  const Hypergraph& core = base.pattern();
  const int r = host.uniformity();
  const int r0 = core.uniformity();
  if (r0 < 2 || r <= r0) throw ParameterError("shadow expansion needs r > r0 >= 2");
  if (!host.is_partite()) throw ParameterError("shadow expansion needs a partite host");
  if (low <= 0 || low > high) throw ParameterError("codegree bounds need 0 < d <= D");
  if (base.host().uniformity() != r0 || base.host().num_vertices() != host.num_vertices()) {
    throw ParameterError("base collection must live on the r0-shadow graph of the host");
  }

  std::vector<int> parts(static_cast<std::size_t>(r0));
  std::iota(parts.begin(), parts.end(), 0);
  const Hypergraph shadows = shadow_graph(host, parts);
  if (shadows.num_edges() != base.host().num_edges()) {
    throw ParameterError("base host differs from the r0-shadow graph of the host");
  }
  for (const auto& e : base.host().edges()) {
    if (!shadows.contains_edge(e)) throw ParameterError("base host edge " + set_to_string(e) + " is not an r0-shadow");
  }
  for (const auto& [s, deg] : shadow_degrees(host, r0, parts)) {
    const Rational q(static_cast<long long>(deg));
    if (q < low || q > high) {
      throw PreconditionError("shadow " + set_to_string(s) + " has codegree " + std::to_string(deg) +
                              " outside [" + to_string(low) + ", " + to_string(high) + "]");
    }
  }

  auto expanded = std::make_shared<const Hypergraph>(expand(core, r));
  ShadowExpansion out(CopyCollection(h, expanded));
  out.mode = options.mode;
  out.core_uniformity = r0;
  out.r = r;
  out.low = low;
  out.high = high;
  out.strict_requirement = Rational(2 * static_cast<long long>(expanded->num_vertices())) *
                           pow_int(Rational(static_cast<long long>(host.num_vertices())), r - r0 - 1);
  out.strict_requirement_met = low >= out.strict_requirement;
  if (options.mode == ExpansionMode::Strict && !out.strict_requirement_met) {
    throw PreconditionError("strict mode needs d >= " + to_string(out.strict_requirement) + ", got " +
                            to_string(low));
  }
  out.base_copies = base.size();
  out.shadow_edges = shadows.num_edges();
  out.min_choices = std::numeric_limits<std::size_t>::max();

  // Host edges grouped by their part-[r0] shadow.
  std::unordered_map<VertexSet, std::vector<EdgeId>, VertexSetHash> over;
  for (EdgeId id = 0; id < host.num_edges(); ++id) {
    VertexSet s;
    for (Vertex v : host.edge(id)) {
      if (host.part_of(v) < r0) s.push_back(v);
    }
    over[s].push_back(id);
  }

  const std::size_t m = core.num_edges();
  const std::size_t core_n = core.num_vertices();
  const CounterRng root(options.seed);
  std::vector<char> used(host.num_vertices(), 0);
  std::vector<EdgeId> chosen(m);
  std::vector<VertexSet> images(m);

  for (std::size_t b = 0; b < base.size(); ++b) {
    const Copy& hat = base.copies()[b];
    for (std::size_t k = 0; k < m; ++k) {
      VertexSet e;
      for (Vertex v : core.edge(static_cast<EdgeId>(k))) e.push_back(hat.embedding[v]);
      std::sort(e.begin(), e.end());
      images[k] = std::move(e);
    }
    RngStream rng(root.split(b));
    std::size_t emitted = 0;

    auto extras = [&](EdgeId id, const VertexSet& e) {
      VertexSet x;
      for (Vertex v : host.edge(id)) {
        if (!std::binary_search(e.begin(), e.end(), v)) x.push_back(v);
      }
      std::sort(x.begin(), x.end(), [&](Vertex a, Vertex c) { return host.part_of(a) < host.part_of(c); });
      return x;
    };

    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (emitted >= options.per_copy_cap) return;
      if (k == m) {
        Copy copy;
        copy.edges.assign(chosen.begin(), chosen.end());
        copy.embedding.assign(expanded->num_vertices(), 0);
        for (std::size_t v = 0; v < core_n; ++v) copy.embedding[v] = hat.embedding[v];
        for (std::size_t j = 0; j < m; ++j) {
          const VertexSet x = extras(chosen[j], images[j]);
          for (int q = 0; q < r - r0; ++q) {
            copy.embedding[expansion_vertex(core_n, r0, r, static_cast<EdgeId>(j), q)] = x[q];
          }
        }
        out.copies.insert(std::move(copy));
        ++emitted;
        return;
      }
      std::vector<EdgeId> options_k;
      const auto it = over.find(images[k]);
      if (it != over.end()) {
        for (EdgeId id : it->second) {
          const VertexSet x = extras(id, images[k]);
          if (std::none_of(x.begin(), x.end(), [&](Vertex v) { return used[v] != 0; })) options_k.push_back(id);
        }
      }
      out.min_choices = std::min(out.min_choices, options_k.size());
      if (options_k.empty()) {
        ++out.dead_ends;
        if (options.mode == ExpansionMode::Strict) {
          throw InvariantError("strict shadow expansion reached a dead end at shadow " + set_to_string(images[k]));
        }
        return;
      }
      if (options.per_copy_cap != kNoCap) shuffle(options_k, rng);
      for (EdgeId id : options_k) {
        const VertexSet x = extras(id, images[k]);
        for (Vertex v : x) used[v] = 1;
        chosen[k] = id;
        self(self, k + 1);
        for (Vertex v : x) used[v] = 0;
        if (emitted >= options.per_copy_cap) return;
      }
    };
    dfs(dfs, 0);
    if (options.per_copy_cap != kNoCap && emitted >= options.per_copy_cap) out.full_census = false;
  }
  if (out.min_choices == std::numeric_limits<std::size_t>::max()) out.min_choices = 0;
  out.copies.truncated = !out.full_census;

  out.count_bound = Rational(static_cast<long long>(base.size())) *
                    pow_int(low / Rational(BigInt(1) << (r + 1)), static_cast<long long>(m));
  out.count_bound_met = out.full_census && Rational(static_cast<long long>(out.copies.size())) >= out.count_bound;

  if (out.full_census) {
    const auto measured = delta_table(out.copies);
    const auto before = delta_table(base);
    for (std::size_t k = 0; k < m; ++k) {
      TransferRow row;
      row.i = static_cast<int>(k + 1);
      row.measured = measured[k];
      row.base_delta = before[k];
      row.bound = Rational(static_cast<long long>(before[k])) * pow_int(high, static_cast<long long>(m - k - 1));
      row.holds = Rational(static_cast<long long>(row.measured)) <= row.bound;
      out.transfer.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<DeltaRow> composed_bound_check(const ShadowExpansion& out, const Rational& gamma, const Rational& tau) {
  if (out.copies.empty()) throw ParameterError("shadow expansion produced no copies");
  const Rational dm = out.high * Rational(static_cast<long long>(out.shadow_edges));
  const long long f = static_cast<long long>(out.copies.pattern().num_edges());
  const Rational factor = pow_int(Rational(BigInt(1) << (out.r + 1)) * out.high / out.low, f);
  const Rational size(static_cast<long long>(out.copies.size()));
  const auto table = delta_table(out.copies);
  std::vector<DeltaRow> rows;
  for (std::size_t k = 0; k < table.size(); ++k) {
    DeltaRow row;
    row.i = static_cast<int>(k + 1);
    row.measured = table[k];
    row.bound = gamma * size / dm * pow_int(tau / dm, static_cast<long long>(k)) * factor;
    row.holds = Rational(static_cast<long long>(row.measured)) <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool replay_certificate(const Hypergraph& host, const TightTreeCertificate& certificate, const Copy& copy) {
  const auto& map = copy.embedding;
  std::vector<char> seen(host.num_vertices(), 0);
  for (std::size_t i = 0; i < certificate.edges.size(); ++i) {
    VertexSet image;
    for (Vertex v : certificate.edges[i]) {
      if (v >= map.size() || map[v] >= host.num_vertices()) return false;
      image.push_back(map[v]);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    if (!host.contains_edge(image)) return false;
    if (i == 0) {
      for (Vertex w : image) seen[w] = 1;
      continue;
    }
    for (Vertex v : certificate.edges[i]) {
      const bool fresh = v == certificate.new_vertex[i];
      if (fresh == (seen[map[v]] != 0)) return false;
    }
    seen[map[certificate.new_vertex[i]]] = 1;
  }
  return true;
}

GreedyExpansion greedy_expand(std::shared_ptr<const Hypergraph> h, const Hypergraph& pattern,
                              const TightTreeCertificate& certificate, const Rational& threshold,
                              const GreedyExpandOptions& options) {
  const Hypergraph& host = *h;
  const int r = host.uniformity();
  if (r < 2 || pattern.uniformity() != r) throw ParameterError("greedy expansion needs matching uniformities >= 2");
  if (pattern.num_edges() == 0 || pattern.num_non_isolated() != pattern.num_vertices()) {
    throw ParameterError("pattern must have edges and no isolated vertices");
  }
  if (certificate.r != r || !validate_certificate(certificate) || !certificate_spans(certificate, pattern)) {
    throw ParameterError("certificate is not a tight tree spanning the pattern");
  }
  for (const auto& [s, deg] : shadow_degrees(host, r - 1)) {
    if (Rational(static_cast<long long>(deg)) <= threshold) {
      throw PreconditionError("shadow " + set_to_string(s) + " has codegree " + std::to_string(deg) +
                              " <= A = " + to_string(threshold));
    }
  }

  auto stored = std::make_shared<const Hypergraph>(pattern);
  GreedyExpansion out(CopyCollection(h, stored), certificate, threshold);
  if (options.density) {
    out.density = *options.density;
  } else if (pattern.num_edges() >= 2) {
    out.density = r_density(pattern).density;
  }

  // Vertices completing each (r-1)-set to a host edge.
  std::unordered_map<VertexSet, std::vector<Vertex>, VertexSetHash> completions;
  for (const auto& e : host.edges()) {
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      VertexSet s;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != skip) s.push_back(e[j]);
      }
      completions[s].push_back(e[skip]);
    }
  }

  const std::size_t v = pattern.num_vertices();
  const std::size_t steps = certificate.edges.size();
  std::vector<Vertex> image(v, 0);
  std::vector<char> used(host.num_vertices(), 0);
  const CounterRng root(options.seed);

  for (EdgeId seed = 0; seed < host.num_edges(); ++seed) {
    ++out.seed_edges;
    RngStream rng(root.split(seed));
    std::size_t emitted = 0;

    auto emit = [&]() {
      Copy copy;
      copy.embedding = image;
      for (const auto& e : pattern.edges()) {
        VertexSet mapped;
        for (Vertex u : e) mapped.push_back(image[u]);
        std::sort(mapped.begin(), mapped.end());
        const auto id = host.find_edge(mapped);
        if (!id) throw InvariantError("tree edge image missing from host");
        copy.edges.push_back(*id);
      }
      out.copies.insert(std::move(copy));
      ++out.embeddings;
      ++emitted;
    };

    auto grow = [&](auto&& self, std::size_t i) -> void {
      if (emitted >= options.per_seed_cap) return;
      if (i == steps) {
        emit();
        return;
      }
      const Vertex fresh = certificate.new_vertex[i];
      VertexSet anchor;
      for (Vertex u : certificate.edges[i]) {
        if (u != fresh) anchor.push_back(image[u]);
      }
      std::sort(anchor.begin(), anchor.end());
      std::vector<Vertex> candidates;
      if (const auto it = completions.find(anchor); it != completions.end()) {
        for (Vertex w : it->second) {
          if (!used[w]) candidates.push_back(w);
        }
      }
      if (candidates.empty()) {
        ++out.dead_ends;
        return;
      }
      if (options.per_seed_cap != kNoCap) shuffle(candidates, rng);
      for (Vertex w : candidates) {
        image[fresh] = w;
        used[w] = 1;
        self(self, i + 1);
        used[w] = 0;
        if (emitted >= options.per_seed_cap) return;
      }
    };

    std::vector<Vertex> order = host.edge(seed);
    do {
      const auto& first = certificate.edges[0];
      for (std::size_t j = 0; j < first.size(); ++j) {
        image[first[j]] = order[j];
        used[order[j]] = 1;
      }
      grow(grow, 1);
      for (Vertex w : order) used[w] = 0;
    } while (emitted < options.per_seed_cap && std::next_permutation(order.begin(), order.end()));
    if (options.per_seed_cap != kNoCap && emitted >= options.per_seed_cap) out.full_census = false;
  }
  out.copies.truncated = !out.full_census;

  const double a = to_double(threshold);
  const double spare = static_cast<double>(v) - r;
  if (out.copies.empty()) {
    out.count_constant = std::numeric_limits<double>::infinity();
  } else {
    out.count_constant = static_cast<double>(host.num_edges()) * std::pow(a, spare) / out.copies.size();
  }
  out.measured_constant = out.count_constant;
  const auto table = delta_table(out.copies);
  const double d = out.density > 0 ? to_double(out.density) : 1.0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double c = table[k] / std::pow(a, spare - static_cast<double>(k) / d);
    out.delta_constants.push_back(c);
    out.measured_constant = std::max(out.measured_constant, c);
  }
  return out;
}

std::optional<BalancedWitness> naive_balanced_collection(std::shared_ptr<const Hypergraph> h, const Hypergraph& f,
                                                         const Rational& gamma, const Rational& tau) {
  if (gamma <= 0 || tau <= 0) throw ParameterError("gamma and tau must be positive");
  CopyCollection current = enumerate_copies(h, f);
  while (!current.empty()) {
    BalancedWitness w = verify_balanced(current, gamma, tau);
    if (w.verdict) return w;

    // The violated row with the largest measured / bound ratio, and the
    // lexicographically smallest edge set attaining its Delta_i.
    const DeltaRow* worst = nullptr;
    Rational worst_ratio;
    for (const auto& row : w.rows) {
      if (row.holds) continue;
      const Rational ratio = Rational(static_cast<long long>(row.measured)) / row.bound;
      if (!worst || ratio > worst_ratio) {
        worst = &row;
        worst_ratio = ratio;
      }
    }
    std::map<std::vector<EdgeId>, std::size_t> counts;
    for (const Copy& copy : current.copies()) {
      for_each_subset_of_size<EdgeId>(std::span<const EdgeId>(copy.edges), static_cast<std::size_t>(worst->i),
                                      [&](std::span<const EdgeId> sub) {
                                        ++counts[std::vector<EdgeId>(sub.begin(), sub.end())];
                                      });
    }
    std::vector<EdgeId> sigma;
    for (const auto& [s, n] : counts) {
      if (n == worst->measured) {
        sigma = s;
        break;
      }
    }
    std::size_t drop = current.size();
    for (std::size_t k = current.size(); k-- > 0;) {
      const auto& e = current.copies()[k].edges;
      if (std::includes(e.begin(), e.end(), sigma.begin(), sigma.end())) {
        drop = k;
        break;
      }
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (k != drop) keep.push_back(k);
    }
    current = current.subset(keep);
  }
  return std::nullopt;
}

OptimalityReport check_optimality_bound(const Hypergraph& f, const BalancedSpec& spec,
                                        const std::vector<ExtremalValue>& known) {
  if (f.uniformity() != spec.r) throw ParameterError("pattern uniformity differs from the spec's");
  OptimalityReport report;
  report.density = r_density(f).density;
  report.density_agrees = report.density == spec_density(spec);
  report.floor = Rational(spec.r) - 1 / report.density;
  report.tau_exponent = balancedness_floor(spec).tau_exponent;
  report.floor_holds = report.tau_exponent >= report.floor;
  report.verdict = report.floor_holds;
  for (const auto& k : known) {
    OptimalityRow row;
    row.n = k.n;
    row.ex = k.ex;
    row.max_edges = spec.max_edges.evaluate(static_cast<double>(k.n), 1.0, 1.0);
    row.exceeds = row.max_edges > static_cast<double>(k.ex);
    report.verdict = report.verdict && row.exceeds;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hyperturan
