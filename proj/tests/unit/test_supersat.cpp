// SPDX-License-Identifier: Apache-2.0
#include "../fixtures.hpp"
#include "../oracles.hpp"

#include "hyperturan/copies.hpp"
#include "hyperturan/error.hpp"
#include "hyperturan/expansion.hpp"
#include "hyperturan/patterns.hpp"
#include "hyperturan/random.hpp"
#include "hyperturan/rates.hpp"
#include "hyperturan/supersat.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace hyperturan;

namespace {

std::shared_ptr<const Hypergraph> share(Hypergraph h) { return std::make_shared<const Hypergraph>(std::move(h)); }

CopyCollection core_copies(const Hypergraph& h) { return enumerate_copies(shadow_graph(h, {0, 1}), cycle_graph(4)); }

/// Brute-force Delta_i of `out` against Delta_i(base) D^(|F| - i).
void check_transfer(const ShadowExpansion& out, const CopyCollection& base, long long high) {
  const auto sets = oracle::edge_sets(out.copies);
  const auto base_sets = oracle::edge_sets(base);
  const int f = static_cast<int>(base.pattern().num_edges());
  REQUIRE(out.transfer.size() == static_cast<std::size_t>(f));
  for (int i = 1; i <= f; ++i) {
    const std::size_t measured = oracle::delta(sets, out.copies.host().num_edges(), i);
    const std::size_t base_delta = oracle::delta(base_sets, base.host().num_edges(), i);
    CHECK(out.transfer[i - 1].measured == measured);
    CHECK(out.transfer[i - 1].base_delta == base_delta);
    CHECK(Rational(measured) <= Rational(base_delta) * pow_int(Rational(high), f - i));
    CHECK(out.transfer[i - 1].holds);
  }
}

}  // namespace

TEST_CASE("verify_balanced on a single copy") {
  const auto h = share(complete_bipartite(2, 2));
  const auto c = enumerate_copies(h, cycle_graph(4));
  REQUIRE(c.size() == 1);
  CHECK(verify_balanced(c, Rational(4), Rational(4)).verdict);
  CHECK_FALSE(verify_balanced(c, Rational(3), Rational(4)).verdict);
  CHECK(verify_balanced(c, Rational(4), Rational(1, 100)).verdict == false);
  CHECK_THROWS_AS(verify_balanced(c, Rational(0), Rational(1)), ParameterError);
  CopyCollection empty(h, share(cycle_graph(4)));
  CHECK_THROWS_AS(verify_balanced(empty, Rational(1), Rational(1)), ParameterError);
}

TEST_CASE("verify_balanced on the four-cycles of K_44") {
  const auto c = enumerate_copies(share(complete_bipartite(4, 4)), cycle_graph(4));
  REQUIRE(c.size() == 36);
  const auto w = verify_balanced(c, Rational(16), Rational(16));
  CHECK(w.verdict);
  for (const auto& row : w.rows) {
    CHECK(row.measured == oracle::delta(oracle::edge_sets(c), 16, row.i));
    // gamma |C| / m * (tau / m)^(i-1) = 36.
    CHECK(row.bound == Rational(36));
  }
}

TEST_CASE("delta never increases when copies are removed") {
  const auto c = enumerate_copies(share(Hypergraph::complete(2, 7)), cycle_graph(4));
  const auto full = delta_table(c);
  RngStream rng(CounterRng(5));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (rng.below(3) != 0) keep.push_back(i);
    }
    if (keep.empty()) continue;
    const auto sub = c.subset(keep);
    const auto t = delta_table(sub);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] <= full[i]);
    std::vector<std::size_t> all_but_last(sub.size() - 1);
    std::iota(all_but_last.begin(), all_but_last.end(), std::size_t{0});
    const auto u = delta_table(sub.subset(all_but_last));
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i] <= t[i]);
  }
}

TEST_CASE("shadow expansion of C4^(3) itself") {
  const auto h = fixture::partite_c4_expansion();
  const auto base = core_copies(h);
  REQUIRE(base.size() == 1);
  const auto out = shadow_expand(share(h), base, Rational(1), Rational(1));
  CHECK(out.copies.size() == 1);
  CHECK(verify_copy(h, out.copies.pattern(), out.copies.copies()[0]));
  check_transfer(out, base, 1);
}

TEST_CASE("shadow expansion of the two-wide gadget") {
  const auto h = fixture::c4_gadget(2);
  const auto base = core_copies(h);
  const auto out = shadow_expand(share(h), base, Rational(2), Rational(2));
  CHECK(out.copies.size() == 16);
  CHECK(out.full_census);
  CHECK(out.count_bound_met);
  for (const auto& copy : out.copies.copies()) CHECK(verify_copy(h, out.copies.pattern(), copy));
  CHECK(out.copies.size() == oracle::copies(h, expand(cycle_graph(4), 3).without_isolated()).size());
  check_transfer(out, base, 2);

  const auto w = verify_balanced(base, Rational(4), Rational(4));
  REQUIRE(w.verdict);
  for (const auto& row : composed_bound_check(out, w.gamma, w.tau)) CHECK(row.holds);
}

TEST_CASE("shadow expansion with unequal codegrees") {
  const auto h = fixture::uneven_codegree_host();
  const auto base = core_copies(h);
  REQUIRE_FALSE(base.empty());
  const auto out = shadow_expand(share(h), base, Rational(4), Rational(6));
  CHECK(out.full_census);
  CHECK(out.count_bound_met);
  CHECK(Rational(out.copies.size()) >= out.count_bound);
  check_transfer(out, base, 6);
  CHECK_THROWS_AS(shadow_expand(share(h), base, Rational(5), Rational(6)), PreconditionError);
  CHECK_THROWS_AS(shadow_expand(share(h), base, Rational(4), Rational(5)), PreconditionError);
}

TEST_CASE("strict mode enforces the codegree requirement") {
  const auto small = fixture::complete_tripartite(3, 3, 4);
  CHECK_THROWS_WITH_AS(shadow_expand(share(small), core_copies(small), Rational(4), Rational(4),
                                     {ExpansionMode::Strict}),
                       doctest::Contains("needs d >= 16"), PreconditionError);
  const auto desk = shadow_expand(share(small), core_copies(small), Rational(4), Rational(4));
  CHECK(desk.copies.size() == 216);
  CHECK_FALSE(desk.strict_requirement_met);
}

TEST_CASE("sampled shadow expansion respects the cap and skips the census rows") {
  const auto h = fixture::complete_tripartite(3, 3, 6);
  ShadowExpandOptions opt;
  opt.per_copy_cap = 2;
  opt.seed = 3;
  const auto base = core_copies(h);
  const auto a = shadow_expand(share(h), base, Rational(6), Rational(6), opt);
  const auto b = shadow_expand(share(h), base, Rational(6), Rational(6), opt);
  CHECK_FALSE(a.full_census);
  CHECK(a.transfer.empty());
  CHECK(a.copies.size() <= 2 * base.size());
  REQUIRE(a.copies.size() == b.copies.size());
  for (std::size_t i = 0; i < a.copies.size(); ++i) CHECK(a.copies.copies()[i].edges == b.copies.copies()[i].edges);
  for (const auto& copy : a.copies.copies()) CHECK(verify_copy(h, a.copies.pattern(), copy));
}

TEST_CASE("shadow expansion rejects a base from another host") {
  const auto h = fixture::c4_gadget(2);
  const auto other = fixture::c4_gadget(3);
  CHECK_THROWS(shadow_expand(share(h), core_copies(other), Rational(2), Rational(2)));
}

TEST_CASE("greedy expansion of a single edge") {
  const auto h = share(Hypergraph::complete(3, 5));
  const Hypergraph one(3, 3, {{0, 1, 2}});
  const TightTreeCertificate cert{3, {{0, 1, 2}}, {0}, {0}};
  const auto g = greedy_expand(h, one, cert, Rational(2), {kNoCap, 0, Rational(1)});
  CHECK(g.copies.size() == 10);
  CHECK(delta_table(g.copies) == std::vector<std::size_t>{1});
}

TEST_CASE("greedy expansion census matches enumeration") {
  const auto c43 = expand(cycle_graph(4), 3);
  const auto cert = spanning_tight_tree(cycle_graph(4), 3);
  const auto h = share(Hypergraph::complete(3, 8));
  const auto g = greedy_expand(h, c43, cert, Rational(2));
  const auto ref = enumerate_copies(h, c43);
  CHECK(g.copies.size() == ref.size());
  CHECK(delta_table(g.copies) == delta_table(ref));
  for (const auto& copy : g.copies.copies()) {
    CHECK(replay_certificate(*h, cert, copy));
    CHECK(ref.contains(copy.edges));
  }
  CHECK(std::isfinite(g.measured_constant));
}

TEST_CASE("greedy expansion on K_7 finds no C4^(3)") {
  // C4^(3) has 8 vertices, so K_7^3 holds no copy; every seed dead-ends.
  const auto h = share(Hypergraph::complete(3, 7));
  const auto g = greedy_expand(h, expand(cycle_graph(4), 3), spanning_tight_tree(cycle_graph(4), 3), Rational(2));
  CHECK(g.copies.empty());
  CHECK(g.dead_ends > 0);
  CHECK_FALSE(std::isfinite(g.count_constant));
}

TEST_CASE("greedy expansion never dead-ends when codegrees exceed A >= v") {
  const auto f = expand(path_graph(3), 3);
  const auto cert = spanning_tight_tree(path_graph(3), 3);
  const auto h = share(Hypergraph::complete(3, 8));
  const auto g = greedy_expand(h, f, cert, Rational(5));
  CHECK(g.dead_ends == 0);
  CHECK(g.copies.size() == enumerate_copies(h, f).size());
}

TEST_CASE("greedy expansion rejects A at or above a codegree") {
  const auto h = share(Hypergraph::complete(3, 7));
  CHECK_THROWS_WITH_AS(
      greedy_expand(h, expand(cycle_graph(4), 3), spanning_tight_tree(cycle_graph(4), 3), Rational(5)),
      doctest::Contains("codegree"), PreconditionError);
}

TEST_CASE("replay rejects a tampered embedding") {
  const auto c43 = expand(cycle_graph(4), 3);
  const auto cert = spanning_tight_tree(cycle_graph(4), 3);
  const auto h = share(Hypergraph::complete(3, 8));
  GreedyExpandOptions opt;
  opt.per_seed_cap = 1;
  const auto g = greedy_expand(h, c43, cert, Rational(2), opt);
  REQUIRE_FALSE(g.copies.empty());
  Copy bad = g.copies.copies()[0];
  std::swap(bad.embedding[0], bad.embedding.back());
  bool any_fail = !replay_certificate(*h, cert, bad);
  bad.embedding[1] = bad.embedding[0];
  any_fail = any_fail || !replay_certificate(*h, cert, bad);
  CHECK(any_fail);
  CHECK_FALSE(replay_certificate(*h, cert, bad));
}

TEST_CASE("naive balanced collection") {
  const auto f = cycle_graph(4);
  const auto self = share(complete_bipartite(2, 2));
  CHECK(naive_balanced_collection(self, f, Rational(4), Rational(4)).has_value());
  CHECK_FALSE(naive_balanced_collection(self, f, Rational(3), Rational(4)).has_value());
  CHECK_FALSE(naive_balanced_collection(share(Hypergraph::complete(2, 3)), f, Rational(4), Rational(4)).has_value());

  const auto k44 = share(complete_bipartite(4, 4));
  const auto generous = naive_balanced_collection(k44, f, Rational(16), Rational(16));
  REQUIRE(generous);
  CHECK(generous->collection.size() == 36);

  // K_44 plus twelve four-cycles through one extra edge {8, 9}: that edge
  // carries more copies than gamma |C| / m allows until some are dropped.
  std::vector<VertexSet> edges = complete_bipartite(4, 4).edges();
  edges.push_back({8, 9});
  for (Vertex i = 0; i < 12; ++i) {
    const Vertex a = 10 + 2 * i;
    edges.push_back({9, a});
    edges.push_back({a, a + 1});
    edges.push_back({8, a + 1});
  }
  const auto booked = share(Hypergraph(2, 34, edges));
  const auto all = enumerate_copies(booked, f);
  REQUIRE(all.size() == 48);
  const Rational gamma(12), tau(53);
  CHECK_FALSE(verify_balanced(all, gamma, tau).verdict);
  const auto thinned = naive_balanced_collection(booked, f, gamma, tau);
  REQUIRE(thinned);
  CHECK(thinned->verdict);
  CHECK(thinned->collection.size() < 48);
  CHECK(thinned->collection.size() >= 45);
  CHECK(verify_balanced(thinned->collection, gamma, tau).verdict);
}

TEST_CASE("optimality bound") {
  const auto k22 = check_optimality_bound(cycle_graph(4), kst_graph_spec(2, 2), {{4, 4}, {5, 6}, {6, 7}, {7, 9}});
  CHECK(k22.floor == Rational(4, 3));
  CHECK(k22.tau_exponent == Rational(4, 3));
  CHECK(k22.floor_holds);
  CHECK(k22.density_agrees);
  CHECK(k22.verdict);

  const auto theta = check_optimality_bound(theta_graph(3, 3), theta_graph_spec(3, 3));
  CHECK(theta.floor == 1 + Rational(2, 8));
  CHECK(theta.floor_holds);

  BalancedSpec low = kst_graph_spec(2, 2);
  low.tau = Rate::monomial(Rational(1));
  CHECK_FALSE(check_optimality_bound(cycle_graph(4), low).verdict);
}
