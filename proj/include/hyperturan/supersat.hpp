// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/copies.hpp"
#include "hyperturan/expansion.hpp"
#include "hyperturan/rates.hpp"
#include "hyperturan/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace hyperturan {

/// One row of a Delta_i table: measured value against an upper bound.
struct DeltaRow {
  int i = 1;
  std::size_t measured = 0;
  Rational bound;
  bool holds = false;
};

struct BalancedWitness {
  CopyCollection collection;
  Rational gamma;
  Rational tau;
  /// m = |E(host)|.
  std::size_t host_edges = 0;
  /// Rows i = 1..|F| with bound gamma |C| / m * (tau / m)^(i-1).
  std::vector<DeltaRow> rows;
  bool verdict = false;
};

/// Exact balancedness test of a copy collection. Throws ParameterError for an
/// empty collection or non-positive gamma, tau.
BalancedWitness verify_balanced(const CopyCollection& c, const Rational& gamma, const Rational& tau);

enum class ExpansionMode { Strict, Desk };

struct ShadowExpandOptions {
  ExpansionMode mode = ExpansionMode::Desk;
  /// Completed expansions kept per base copy; kNoCap gives the full census.
  std::size_t per_copy_cap = kNoCap;
  std::uint64_t seed = 0;
};

/// Delta_i(out) against Delta_i(base) * D^(|F|-i).
struct TransferRow {
  int i = 1;
  std::size_t measured = 0;
  std::size_t base_delta = 0;
  Rational bound;
  bool holds = false;
};

struct ShadowExpansion {
  explicit ShadowExpansion(CopyCollection c) : copies(std::move(c)) {}

  CopyCollection copies;
  ExpansionMode mode = ExpansionMode::Desk;
  int core_uniformity = 2;
  int r = 3;
  Rational low;   // d
  Rational high;  // D
  /// 2 v(F^(r)) n^(r - r0 - 1) and whether low reaches it.
  Rational strict_requirement;
  bool strict_requirement_met = false;
  std::size_t base_copies = 0;
  /// |E| of the r0-shadow graph.
  std::size_t shadow_edges = 0;
  std::size_t dead_ends = 0;
  /// Fewest options seen for any h_k.
  std::size_t min_choices = 0;
  bool full_census = true;
  /// |base| (d / 2^(r+1))^|F|; checked on full censuses only.
  Rational count_bound;
  bool count_bound_met = false;
  /// Empty unless full_census.
  std::vector<TransferRow> transfer;
};

/// Expands every copy of `base` (copies of an r0-graph F in the r0-shadow
/// graph of h on parts 0..r0-1) into copies of F^(r) in h. The core pattern
/// is base.pattern(). Throws PreconditionError when some shadow codegree
/// falls outside [low, high] or, in strict mode, when low is below the
/// strict requirement; a strict-mode dead end throws InvariantError.
ShadowExpansion shadow_expand(std::shared_ptr<const Hypergraph> h, const CopyCollection& base, const Rational& low,
                              const Rational& high, const ShadowExpandOptions& options = {});

/// Rows for the composed bound gamma |C| / (D m) * (tau / (D m))^(i-1) *
/// (2^(r+1) D / d)^|F| with m the shadow edge count, for the gamma and tau
/// the base collection was balanced with.
std::vector<DeltaRow> composed_bound_check(const ShadowExpansion& out, const Rational& gamma, const Rational& tau);

struct GreedyExpandOptions {
  /// Completed tree embeddings kept per seed edge; kNoCap gives the full census.
  std::size_t per_seed_cap = kNoCap;
  std::uint64_t seed = 0;
  /// r-density of the pattern; computed exhaustively when absent.
  std::optional<Rational> density;
};

struct GreedyExpansion {
  GreedyExpansion(CopyCollection c, TightTreeCertificate cert, Rational a)
      : copies(std::move(c)), certificate(std::move(cert)), threshold(std::move(a)) {}

  CopyCollection copies;
  TightTreeCertificate certificate;
  Rational threshold;  // A
  Rational density;
  std::size_t seed_edges = 0;
  std::size_t embeddings = 0;
  std::size_t dead_ends = 0;
  bool full_census = true;
  /// |H| A^(v-r) / |C|, and Delta_i / A^(v - r - (i-1)/d) for each i.
  /// Infinite count constant when the collection is empty.
  double count_constant = 0;
  std::vector<double> delta_constants;
  double measured_constant = 0;
};

/// Grows copies of `pattern` along the certificate order: each host edge
/// seeds the first tree edge under every bijection, and every later tree
/// edge adds one fresh host vertex. The certificate must span the pattern.
/// Throws PreconditionError naming a shadow whose codegree is at most A.
GreedyExpansion greedy_expand(std::shared_ptr<const Hypergraph> h, const Hypergraph& pattern,
                              const TightTreeCertificate& certificate, const Rational& threshold,
                              const GreedyExpandOptions& options = {});

/// Re-checks that copy.embedding maps the certificate edges, in order, onto
/// host edges with each new vertex landing outside the earlier images.
bool replay_certificate(const Hypergraph& host, const TightTreeCertificate& certificate, const Copy& copy);

/// All copies of F in H, thinned by repeatedly dropping a copy through the
/// most overloaded edge set until the collection is balanced. Empty optional
/// when nothing is left.
std::optional<BalancedWitness> naive_balanced_collection(std::shared_ptr<const Hypergraph> h, const Hypergraph& f,
                                                         const Rational& gamma, const Rational& tau);

struct ExtremalValue {
  std::size_t n = 0;
  std::size_t ex = 0;
};

struct OptimalityRow {
  std::size_t n = 0;
  std::size_t ex = 0;
  double max_edges = 0;  // M(n) with constants 1 and C = 1
  bool exceeds = false;
};

struct OptimalityReport {
  Rational density;
  bool density_agrees = false;
  Rational floor;         // r - 1/d
  Rational tau_exponent;  // at m = n^r
  bool floor_holds = false;
  std::vector<OptimalityRow> rows;
  bool verdict = false;
};

/// The tau floor n^(r - 1/d_r(f)) against the spec's tau (exponents only) and
/// M(n) > ex(n, f) for each supplied extremal number.
OptimalityReport check_optimality_bound(const Hypergraph& f, const BalancedSpec& spec,
                                        const std::vector<ExtremalValue>& known = {});

}  // namespace hyperturan
