// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/serialize.hpp"

#include "hyperturan/io.hpp"

#include <cmath>
#include <cstdio>

namespace hyperturan {

using nlohmann::json;

namespace {

json log_power(const LogPower& p) {
  return {{"constant", rational_json(p.constant)}, {"symbolic", rational_json(p.symbolic)}};
}

}  // namespace

json rational_json(const Rational& q) { return to_string(q); }

json to_json(const Monomial& m) {
  return {{"n", rational_json(m.n_exp)}, {"m", rational_json(m.m_exp)}, {"log", log_power(m.log)}};
}

json to_json(const Rate& rate) {
  json terms = json::array();
  for (const auto& t : rate.terms()) terms.push_back(to_json(t));
  return {{"text", rate.to_string()}, {"terms", terms}};
}

json to_json(const BalancedSpec& spec) {
  return {{"pattern", spec.pattern},
          {"r", spec.r},
          {"core_uniformity", spec.core_uniformity},
          {"core_density", rational_json(spec.core_density)},
          {"density", rational_json(spec_density(spec))},
          {"M", to_json(spec.max_edges)},
          {"gamma", to_json(spec.gamma)},
          {"tau", to_json(spec.tau)},
          {"note", spec.note}};
}

json to_json(const FloorCheck& f) {
  return {{"floor", rational_json(f.floor)}, {"tau_exponent", rational_json(f.tau_exponent)}, {"holds", f.holds}};
}

json to_json(const ThresholdReport& t) {
  json stated = json::array();
  for (const auto& s : t.stated) {
    stated.push_back({{"source", s.source}, {"stated", rational_json(s.stated)}, {"agrees", s.agrees}});
  }
  return {{"pattern", t.pattern},
          {"r", t.r},
          {"density", rational_json(t.density)},
          {"threshold_exponent", rational_json(t.threshold_exponent)},
          {"plateau_exponent", rational_json(t.plateau_exponent)},
          {"sparse_low", rational_json(t.sparse_low)},
          {"m_exponent", rational_json(t.m_exponent)},
          {"tau_at_m", to_json(t.tau_at_m)},
          {"tau_matches_plateau", t.tau_matches_plateau},
          {"shape", t.shape},
          {"stated", stated}};
}

json to_json(const KstAnalysis& k) {
  return {{"s", k.s},
          {"t", k.t},
          {"r", k.r},
          {"alpha", rational_json(k.alpha)},
          {"beta", rational_json(k.beta)},
          {"p_exponent", rational_json(k.p_exponent)},
          {"criterion", rational_json(k.criterion)},
          {"beta_at_least_alpha", k.beta_at_least_alpha},
          {"criterion_holds", k.criterion_holds},
          {"criterion_agrees", k.criterion_agrees},
          {"closing", {{"lhs", rational_json(k.closing_lhs)}, {"rhs", rational_json(k.closing_rhs)},
                       {"identity", k.closing_identity}, {"sign_agrees", k.closing_sign_agrees}}},
          {"xy", {{"x_product", rational_json(k.x_product)}, {"x_closed", rational_json(k.x_closed)},
                  {"y_product", rational_json(k.y_product)}, {"y_closed", rational_json(k.y_closed)},
                  {"identity", k.xy_identity}}},
          {"cancellation_identity", k.cancellation_identity},
          {"greedy_term_identity", k.greedy_term_identity}};
}

json to_json(const ThetaIdentity& t) {
  return {{"lhs", t.lhs.str()}, {"rhs", t.rhs.str()}, {"equal", t.equal}, {"positive", t.positive}};
}

json to_json(const LiftComparison& c) {
  return {{"shadow", to_json(c.shadow)},
          {"greedy", to_json(c.greedy)},
          {"regime", {rational_json(c.regime.lo), rational_json(c.regime.hi)}},
          {"greedy_at_most_shadow", c.greedy_at_most_shadow}};
}

json to_json(const DensityReport& d) {
  return {{"density", rational_json(d.density)},
          {"optimal_edges", d.optimal_edges},
          {"optimal_vertices", d.optimal_vertices},
          {"examined", d.examined},
          {"method", d.method}};
}

json to_json(const DensityRelation& d) {
  return {{"r0", d.r0},
          {"r", d.r},
          {"core_density", rational_json(d.core_density)},
          {"expanded_density", rational_json(d.expanded)},
          {"lhs", rational_json(d.lhs)},
          {"rhs", rational_json(d.rhs)},
          {"holds", d.holds},
          {"strict_bound", d.strict_bound}};
}

json to_json(const TightTreeCertificate& c) {
  return {{"r", c.r}, {"edges", c.edges}, {"new_vertex", c.new_vertex}, {"witness", c.witness}};
}

json to_json(const CopyCollection& c) {
  json a = json::array();
  for (const auto& copy : c.copies()) a.push_back(copy.edges);
  return a;
}

json to_json(const DeltaRow& row) {
  return {{"i", row.i}, {"measured", row.measured}, {"bound", rational_json(row.bound)}, {"holds", row.holds}};
}

json to_json(const BalancedWitness& w, bool with_copies) {
  json rows = json::array();
  for (const auto& r : w.rows) rows.push_back(to_json(r));
  json j = {{"gamma", rational_json(w.gamma)},
            {"tau", rational_json(w.tau)},
            {"host_edges", w.host_edges},
            {"copies", w.collection.size()},
            {"rows", rows},
            {"verdict", w.verdict}};
  if (with_copies) j["collection"] = to_json(w.collection);
  return j;
}

json to_json(const ShadowExpansion& s, bool with_copies) {
  json transfer = json::array();
  for (const auto& t : s.transfer) {
    transfer.push_back({{"i", t.i}, {"measured", t.measured}, {"base_delta", t.base_delta},
                        {"bound", rational_json(t.bound)}, {"holds", t.holds}});
  }
  json j = {{"mode", s.mode == ExpansionMode::Strict ? "strict" : "desk"},
            {"core_uniformity", s.core_uniformity},
            {"r", s.r},
            {"d", rational_json(s.low)},
            {"D", rational_json(s.high)},
            {"strict_requirement", rational_json(s.strict_requirement)},
            {"strict_requirement_met", s.strict_requirement_met},
            {"base_copies", s.base_copies},
            {"shadow_edges", s.shadow_edges},
            {"copies", s.copies.size()},
            {"dead_ends", s.dead_ends},
            {"min_choices", s.min_choices},
            {"full_census", s.full_census},
            {"count_bound", rational_json(s.count_bound)},
            {"count_bound_met", s.count_bound_met},
            {"transfer", transfer}};
  if (with_copies) j["collection"] = to_json(s.copies);
  return j;
}

json to_json(const GreedyExpansion& g, bool with_copies) {
  auto finite = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  json deltas = json::array();
  for (double c : g.delta_constants) deltas.push_back(finite(c));
  json j = {{"threshold", rational_json(g.threshold)},
            {"density", rational_json(g.density)},
            {"certificate", to_json(g.certificate)},
            {"seed_edges", g.seed_edges},
            {"embeddings", g.embeddings},
            {"dead_ends", g.dead_ends},
            {"full_census", g.full_census},
            {"copies", g.copies.size()},
            {"delta", delta_table(g.copies)},
            {"count_constant", finite(g.count_constant)},
            {"delta_constants", deltas},
            {"measured_constant", finite(g.measured_constant)}};
  if (with_copies) j["collection"] = to_json(g.copies);
  return j;
}

json to_json(const OptimalityReport& o) {
  json rows = json::array();
  for (const auto& r : o.rows) {
    rows.push_back({{"n", r.n}, {"ex", r.ex}, {"M", r.max_edges}, {"exceeds", r.exceeds}});
  }
  return {{"density", rational_json(o.density)},
          {"density_agrees", o.density_agrees},
          {"floor", rational_json(o.floor)},
          {"tau_exponent", rational_json(o.tau_exponent)},
          {"floor_holds", o.floor_holds},
          {"rows", rows},
          {"verdict", o.verdict}};
}

json to_json(const RegularizedSlice& s) {
  json chain = json::array();
  for (const auto& c : s.chain) {
    chain.push_back({{"k", c.k}, {"shadows", c.shadows}, {"shadow_target", c.shadow_target},
                     {"shadow_met", c.shadow_met}, {"delta_target", c.delta_target}, {"delta_met", c.delta_met}});
  }
  return {{"subgraph", to_json(s.subgraph)},
          {"original", s.original},
          {"part_order", s.part_order},
          {"delta", s.delta},
          {"shadow_count", s.shadow_count},
          {"min_degree", s.min_degree},
          {"slack", rational_json(s.slack)},
          {"formula_slack", s.formula_slack},
          {"formula_slack_applies", s.formula_slack_applies},
          {"levels", s.levels},
          {"types", s.types},
          {"input_edges", s.input_edges},
          {"bucket_edges", s.bucket_edges},
          {"pruned", s.pruned},
          {"prune_passes", s.prune_passes},
          {"chain", chain}};
}

json to_json(const Dichotomy& d) {
  json buckets = json::array();
  for (const auto& b : d.buckets) buckets.push_back({{"parts", b.parts}, {"level", b.level}, {"size", b.size}});
  return {{"tag", d.tag == DichotomyTag::AllLarge ? "all_large" : "regular"},
          {"edges", d.edges},
          {"part_order", d.part_order},
          {"threshold", rational_json(d.threshold)},
          {"level", d.level},
          {"bound", rational_json(d.bound)},
          {"clamped", d.clamped},
          {"leftover", d.leftover},
          {"removals", d.removals},
          {"buckets", buckets},
          {"size_bound_met", d.size_bound_met}};
}

json to_json(const ExtremalResult& e) {
  return {{"value", e.value}, {"witness", e.witness}, {"nodes", e.nodes}, {"optimal", e.optimal}, {"copies", e.copies}};
}

json to_json(const DeletionBound& d) {
  return {{"sub_pattern", d.sub_pattern}, {"sub_copies", d.sub_copies}, {"kept", d.kept.size()}, {"deleted", d.deleted}};
}

json to_json(const SweepRow& row, bool with_millis) {
  json j = {{"n", row.n},
            {"r", row.r},
            {"p", rational_json(row.p)},
            {"seed", row.seed},
            {"edges", row.edges},
            {"exact", row.exact},
            {"ex_value", row.ex_value},
            {"deletion_lb", row.deletion_lb},
            {"star_lb", row.star_lb ? json(*row.star_lb) : json(nullptr)},
            {"nodes", row.nodes}};
  if (with_millis) j["millis"] = row.millis;
  return j;
}

json to_json(const SweepSummary& s) {
  json points = json::array();
  for (const auto& p : s.points) {
    points.push_back({{"p", rational_json(p.p)}, {"median_edges", p.median_edges}, {"median_ex", p.median_ex},
                      {"sparse", p.sparse}, {"in_window", p.in_window}});
  }
  return {{"density", rational_json(s.density)},
          {"threshold", s.threshold},
          {"window_low", s.window_low},
          {"window_empty", s.window_empty},
          {"median_monotone", s.median_monotone},
          {"points", points}};
}

json to_json(const SweepResult& s, bool with_millis) {
  json rows = json::array();
  for (const auto& r : s.rows) rows.push_back(to_json(r, with_millis));
  return {{"rows", rows}, {"summary", to_json(s.summary)}};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hyperturan
