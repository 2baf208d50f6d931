// SPDX-License-Identifier: Apache-2.0
#include "../checks.hpp"
#include "../fixtures.hpp"

#include "hyperturan/error.hpp"
#include "hyperturan/regularize.hpp"

#include <doctest.h>

using namespace hyperturan;

TEST_CASE("complete tripartite graph is already regular") {
  const auto h = fixture::complete_tripartite(4, 4, 4);
  const auto s = superregularize(h);
  CHECK(s.types == 1);
  CHECK(s.pruned == 0);
  CHECK(s.subgraph.num_edges() == 64);
  CHECK(s.subgraph.edges() == h.edges());
  CHECK(s.delta[0] == 128);   // 64 edges: 2^6 <= 64 < 2^7
  CHECK(s.delta[7] == 2);     // every edge has codegree 1
  CHECK(s.delta[1] == 32);    // 16 edges through each vertex
  CHECK(s.slack == Rational(1, 2));
  CHECK(check::superregular(h, s).empty());
}

TEST_CASE("single edge") {
  const Hypergraph h(3, 3, {{0, 1, 2}}, std::vector<int>{0, 1, 2});
  const auto s = superregularize(h);
  CHECK(s.subgraph.num_edges() == 1);
  // Codegree 1 sits in the dyadic band [1, 2).
  for (auto d : s.delta) CHECK(d == 2);
  CHECK(check::superregular(h, s).empty());
}

TEST_CASE("pendant edge is dropped") {
  // Dense 3x3x3 block on vertices 0..8 plus one edge through vertex 0 and
  // two fresh vertices, on 12 vertices in total.
  std::vector<VertexSet> edges;
  for (Vertex i = 0; i < 3; ++i) {
    for (Vertex j = 3; j < 6; ++j) {
      for (Vertex k = 6; k < 9; ++k) edges.push_back({i, j, k});
    }
  }
  edges.push_back({0, 10, 11});
  const Hypergraph h(3, 12, edges, std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 1, 2});
  const auto s = superregularize(h);
  CHECK(s.subgraph.num_edges() == 27);
  CHECK(s.subgraph.num_vertices() == 9);
  for (auto v : s.original) CHECK(v < 9);
  CHECK(check::superregular(h, s).empty());
}

TEST_CASE("superregularize postconditions on random partite graphs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto h = fixture::random_partite(3, 3, 6, 2, 5, seed);
    const auto s = superregularize(h);
    CHECK_MESSAGE(check::superregular(h, s) == "", "seed " << seed);
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto h = fixture::random_partite(4, 2, 4, 1, 2, seed);
    const auto s = superregularize(h);
    CHECK_MESSAGE(check::superregular(h, s) == "", "r=4 seed " << seed);
  }
}

TEST_CASE("threshold scale raises the pruning floor") {
  const auto h = fixture::random_partite(3, 4, 6, 1, 2, 99);
  const auto base = superregularize(h);
  SuperregularizeOptions harsh;
  harsh.threshold_scale = Rational(4096);
  try {
    const auto s = superregularize(h, harsh);
    CHECK(s.pruned >= base.pruned);
    CHECK(check::superregular(h, s, harsh.threshold_scale).empty());
  } catch (const InvariantError&) {
    // Everything pruned is a legitimate outcome for an extreme scale.
  }
}

TEST_CASE("superregularize rejects non-partite input") {
  CHECK_THROWS_AS(superregularize(Hypergraph::complete(3, 5)), ParameterError);
  const Hypergraph bad(3, 4, {{0, 1, 2}, {0, 1, 3}}, std::vector<int>{0, 1, 2, 0});
  CHECK_THROWS_AS(superregularize(bad), ParameterError);
}

TEST_CASE("dichotomize: all codegrees above A") {
  const auto h = fixture::complete_tripartite(4, 4, 4);
  const auto d = dichotomize(h, Rational(3));
  CHECK(d.tag == DichotomyTag::AllLarge);
  CHECK(d.edges.size() == 64);
  CHECK(d.removals == 0);
  CHECK(check::dichotomy(h, d).empty());
}

TEST_CASE("dichotomize: single edge boundary") {
  const Hypergraph h(3, 3, {{0, 1, 2}}, std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(dichotomize(h, Rational(1)), DegenerateInputError);
  const auto d = dichotomize(h, Rational(2));
  CHECK(d.tag == DichotomyTag::Regular);
  CHECK(d.bound == Rational(2));
  CHECK_FALSE(d.clamped);
  CHECK(check::dichotomy(h, d).empty());
}

TEST_CASE("dichotomize: tight path") {
  std::vector<VertexSet> edges;
  for (Vertex i = 0; i < 10; ++i) edges.push_back({i, i + 1, i + 2});
  std::vector<int> part(12);
  for (int v = 0; v < 12; ++v) part[v] = v % 3;
  const Hypergraph h(3, 12, edges, part);
  const auto d = dichotomize(h, Rational(2));
  CHECK(d.tag == DichotomyTag::Regular);
  CHECK(check::dichotomy(h, d).empty());
}

TEST_CASE("dichotomize: clamp when a codegree equals A") {
  // Each pair in parts 0, 1 sees exactly two third vertices.
  const auto h = fixture::tripartite(2, 2, 4, [](int i, int j, int k) { return k / 2 == (i + j) % 2; });
  const auto d = dichotomize(h, Rational(2));
  REQUIRE(d.tag == DichotomyTag::Regular);
  CHECK(d.clamped);
  CHECK(d.bound == Rational(3));
  CHECK(check::dichotomy(h, d).empty());
}

TEST_CASE("dichotomize postconditions on random partite graphs") {
  int regular = 0;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const auto h = fixture::random_partite(3, 3, 6, 1, 3, seed);
    for (const Rational& a : {Rational(2), Rational(3), Rational(5, 2)}) {
      const auto d = dichotomize(h, a);
      CHECK_MESSAGE(check::dichotomy(h, d) == "", "seed " << seed << " A=" << to_string(a));
      if (d.tag == DichotomyTag::Regular) ++regular;
    }
  }
  CHECK(regular > 0);
}

TEST_CASE("dichotomize rejects A outside its window") {
  const auto h = fixture::complete_tripartite(3, 3, 3);
  CHECK_THROWS_AS(dichotomize(h, Rational(100)), ParameterError);
  CHECK_THROWS_AS(dichotomize(h, Rational(0)), ParameterError);
}

TEST_CASE("re-running on the output prunes nothing") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto h = fixture::random_partite(3, 3, 6, 2, 5, seed);
    const auto once = superregularize(h);
    const auto twice = superregularize(once.subgraph);
    CHECK_MESSAGE(twice.pruned == 0, "seed " << seed);
  }
}
