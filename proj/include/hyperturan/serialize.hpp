// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/copies.hpp"
#include "hyperturan/expansion.hpp"
#include "hyperturan/rates.hpp"
#include "hyperturan/regularize.hpp"
#include "hyperturan/rturan.hpp"
#include "hyperturan/supersat.hpp"

#include <json.hpp>

#include <string>

namespace hyperturan {

// Rationals are written as "p/q" strings so values survive exactly. None of
// these include wall-clock fields; sweep rows carry millis only on request.

nlohmann::json rational_json(const Rational& q);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const Rate& rate);
nlohmann::json to_json(const BalancedSpec& spec);
nlohmann::json to_json(const FloorCheck& f);
nlohmann::json to_json(const ThresholdReport& t);
nlohmann::json to_json(const KstAnalysis& k);
nlohmann::json to_json(const ThetaIdentity& t);
nlohmann::json to_json(const LiftComparison& c);

nlohmann::json to_json(const DensityReport& d);
nlohmann::json to_json(const DensityRelation& d);
nlohmann::json to_json(const TightTreeCertificate& c);

/// Copies as edge-id lists, in collection order.
nlohmann::json to_json(const CopyCollection& c);
nlohmann::json to_json(const DeltaRow& row);
nlohmann::json to_json(const BalancedWitness& w, bool with_copies = true);
nlohmann::json to_json(const ShadowExpansion& s, bool with_copies = false);
nlohmann::json to_json(const GreedyExpansion& g, bool with_copies = false);
nlohmann::json to_json(const OptimalityReport& o);

nlohmann::json to_json(const RegularizedSlice& s);
nlohmann::json to_json(const Dichotomy& d);

nlohmann::json to_json(const ExtremalResult& e);
nlohmann::json to_json(const DeletionBound& d);
nlohmann::json to_json(const SweepRow& row, bool with_millis);
nlohmann::json to_json(const SweepSummary& s);
nlohmann::json to_json(const SweepResult& s, bool with_millis);

/// 64-bit FNV-1a of a string, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace hyperturan
