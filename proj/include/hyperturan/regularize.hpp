// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/hypergraph.hpp"
#include "hyperturan/rational.hpp"

#include <cstdint>
#include <vector>

namespace hyperturan {

struct SuperregularizeOptions {
  /// Multiplies the deletion threshold Delta_I / (2B)^(2^r) of step (3).
  Rational threshold_scale = Rational(1);
};

/// One entry of the part-relabeling chain: bounds for the prefix [k].
struct ChainEntry {
  int k = 1;
  std::size_t shadows = 0;      // achieved count of k-shadows in the first k parts
  double shadow_target = 0;     // asymptotic lower bound evaluated at this n
  bool shadow_met = false;
  double delta_target = 0;      // asymptotic upper bound on Delta_[k]
  bool delta_met = false;
};

/// Output of superregularize. Subsets I of parts are bitmasks over the
/// relabeled parts: bit i stands for new part i.
struct RegularizedSlice {
  /// H' without isolated vertices, relabeled densely, partition in new part order.
  Hypergraph subgraph;
  /// original[v] is the input label of vertex v of subgraph.
  std::vector<Vertex> original;
  /// New part i is input part part_order[i].
  std::vector<int> part_order;
  /// Delta_I = 2^{y_I}, indexed by mask.
  std::vector<std::uint64_t> delta;
  /// Number of |I|-shadows of H' meeting each part of I once.
  std::vector<std::size_t> shadow_count;
  /// Smallest positive codegree over those shadows.
  std::vector<std::size_t> min_degree;
  /// Achieved slack: min over I of min_degree[I] / delta[I].
  Rational slack;
  /// (2 r log2 n)^(-2^r); compared with slack when it is at most 1.
  double formula_slack = 0;
  bool formula_slack_applies = false;
  /// Largest number of distinct dyadic levels over all coordinates I.
  int levels = 0;
  std::size_t types = 0;
  std::size_t input_edges = 0;
  std::size_t bucket_edges = 0;
  /// Edges removed in the pruning step and how many passes it took.
  std::size_t pruned = 0;
  int prune_passes = 0;
  std::vector<ChainEntry> chain;
};

/// Type-vector regularization of a partite r-graph. Throws
/// DegenerateInputError for an empty input and ParameterError when H is
/// not partite.
RegularizedSlice superregularize(const Hypergraph& h, const SuperregularizeOptions& options = {});

enum class DichotomyTag { AllLarge, Regular };

struct DichotomyBucket {
  /// Parts (input labels) met by the removed (r-1)-shadows, ascending.
  std::vector<int> parts;
  int level = 0;
  std::size_t size = 0;
};

struct Dichotomy {
  DichotomyTag tag = DichotomyTag::AllLarge;
  /// Same vertex labels as the input. For Regular the partition is relabeled
  /// so the designated r-1 parts become 0..r-2.
  Hypergraph subgraph;
  /// Input edge ids of subgraph, ascending.
  std::vector<EdgeId> edges;
  std::vector<int> part_order;
  Rational threshold;
  /// Regular only: dyadic level a and the sandwich bound D.
  int level = 0;
  Rational bound;
  /// D was raised to A + 1 because a shadow had codegree exactly A.
  bool clamped = false;
  std::size_t leftover = 0;
  std::size_t removals = 0;
  std::vector<DichotomyBucket> buckets;
  /// |subgraph| against |H|/2 (AllLarge) or |H|/(4 r log2 n) (Regular).
  bool size_bound_met = false;
};

/// Repeatedly strips the edges through an (r-1)-shadow of codegree at most A,
/// binning them by (parts met, dyadic level). Requires |H|/(4 n^{r-1}) < A <= n.
Dichotomy dichotomize(const Hypergraph& h, const Rational& threshold);

}  // namespace hyperturan
