// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/hypergraph.hpp"
#include "hyperturan/rational.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hyperturan {

struct SampleConfig {
  std::size_t n = 0;
  int r = 2;
  Rational p = Rational(1);
  std::uint64_t seed = 0;
};

/// G^r_{n,p}: edge number k (lexicographic order) is kept iff draw k of the
/// seeded generator succeeds, so the result is independent of iteration
/// order. Throws ParameterError unless 0 < p <= 1 and n >= r.
Hypergraph sample_gnp(const SampleConfig& cfg);

struct ExtremalResult {
  /// Largest F-free subgraph size found.
  std::size_t value = 0;
  /// Host edge ids of that subgraph, ascending.
  std::vector<EdgeId> witness;
  std::uint64_t nodes = 0;
  /// False when the node budget ran out before the search finished.
  bool optimal = false;
  std::size_t copies = 0;
};

/// Maximum F-free subgraph of H via branch and bound on a minimum set of
/// edges hitting every copy. Budget exhaustion is reported through
/// `optimal`, not an exception.
ExtremalResult max_f_free(const Hypergraph& h, const Hypergraph& f, std::uint64_t budget = 10'000'000);

/// Re-checks a result: the witness is F-free with the reported size, and when
/// optimal every omitted edge would create a copy.
bool validate_extremal(const Hypergraph& h, const Hypergraph& f, const ExtremalResult& result);

struct DeletionBound {
  /// Densest subgraph of F used for the deletions (edge ids of F).
  std::vector<EdgeId> sub_pattern;
  std::size_t sub_copies = 0;
  /// Remaining host edge ids, ascending.
  std::vector<EdgeId> kept;
  std::size_t deleted = 0;
};

/// Deletes edges of H, most-covering first, until no copy of the densest
/// subgraph of F survives. The kept edges form an F-free subgraph.
DeletionBound deletion_lower_bound(const Hypergraph& h, const Hypergraph& f);

struct StarBound {
  Hypergraph star;
  /// Whether the copy search ran and found nothing.
  bool checked = false;
  bool free = false;
};

/// All r-sets through vertex 0 of [n]. The core pattern needs maximum degree
/// below its edge count (NotApplicableError otherwise). The copy search runs
/// when the star has at most check_limit edges.
StarBound star_lower_bound(std::size_t n, const Hypergraph& core, int r, std::size_t check_limit = 2000);

struct SweepConfig {
  std::string pattern_name;
  Hypergraph core;
  int r = 3;
  std::size_t n = 0;
  std::vector<Rational> p_grid;
  std::vector<std::uint64_t> seeds;
  std::uint64_t budget = 1'000'000;
  /// 0 reads HYPERTURAN_THREADS, falling back to the hardware count.
  unsigned threads = 0;
};

struct SweepRow {
  std::size_t n = 0;
  int r = 3;
  Rational p;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  bool exact = false;
  std::size_t ex_value = 0;
  std::size_t deletion_lb = 0;
  /// Edges of the sample through vertex 0; empty when the star does not apply.
  std::optional<std::size_t> star_lb;
  std::uint64_t nodes = 0;
  std::uint64_t millis = 0;
};

struct SweepPoint {
  Rational p;
  double median_edges = 0;
  double median_ex = 0;
  /// p below n^(-1/d).
  bool sparse = false;
  /// p strictly between n^(-r) and n^(-1/d).
  bool in_window = false;
};

struct SweepSummary {
  Rational density;
  double threshold = 0;  // n^(-1/d)
  double window_low = 0; // n^(-r)
  bool window_empty = true;
  bool median_monotone = true;
  std::vector<SweepPoint> points;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  SweepSummary summary;
  unsigned threads = 1;
};

unsigned default_threads();

/// One cell per (p, seed), run in parallel; rows come back ordered by p-grid
/// position then seed position regardless of scheduling.
SweepResult sweep(const SweepConfig& cfg);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_millis = true);

}  // namespace hyperturan
