// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hyperturan/patterns.hpp"
#include "hyperturan/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperturan {

/// Exponent of log n written as constant + symbolic * C, where C stands for
/// an unspecified (large) constant.
struct LogPower {
  Rational constant;
  Rational symbolic;

  friend bool operator==(const LogPower&, const LogPower&) = default;
};

LogPower operator+(const LogPower& a, const LogPower& b);
LogPower operator*(const LogPower& a, const Rational& k);
/// Orders by the symbolic coefficient first (C is taken arbitrarily large).
int compare(const LogPower& a, const LogPower& b);

/// n^n_exp * m^m_exp * (log n)^log.
struct Monomial {
  Rational n_exp;
  Rational m_exp;
  LogPower log;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Range of m = n^x, lo <= x <= hi, used to discard dominated monomials.
struct Regime {
  Rational lo;
  Rational hi;
};

/// The edge regime n^{r-1} <= m <= n^r.
Regime edge_regime(int r);

/// Compares two monomials at m = n^x, up to constant factors: n-exponent
/// first, then the log power.
int compare_at(const Monomial& a, const Monomial& b, const Rational& x);

/// A maximum of monomials. Arithmetic is exact; constant factors are dropped.
class Rate {
 public:
  Rate() = default;
  explicit Rate(std::vector<Monomial> terms);
  static Rate monomial(Rational n_exp, Rational m_exp = Rational(0), LogPower log = {});
  static Rate one() { return monomial(Rational(0)); }
  /// (log n)^{constant + symbolic C}
  static Rate polylog(Rational constant, Rational symbolic = Rational(0));

  [[nodiscard]] const std::vector<Monomial>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool single() const noexcept { return terms_.size() == 1; }
  [[nodiscard]] bool depends_on_m() const;

  /// Drops every monomial that another one matches or beats at both ends
  /// of the regime, then sorts the survivors.
  [[nodiscard]] Rate normalized(const Regime& regime) const;

  /// Product of two maxima: the maximum of pairwise products.
  friend Rate operator*(const Rate& a, const Rate& b);
  /// Maximum of the two rates.
  [[nodiscard]] Rate max_with(const Rate& other) const;
  /// Non-negative powers distribute over the maximum; negative powers need a
  /// single monomial (ParameterError otherwise).
  [[nodiscard]] Rate pow(const Rational& e) const;
  /// this(n, g) with g = min of the given monomials. Needs every m exponent
  /// of this rate to be <= 0 unless g is a single monomial.
  [[nodiscard]] Rate substitute_m_min(const std::vector<Monomial>& g) const;
  /// this(n, g) for a single monomial g.
  [[nodiscard]] Rate substitute_m(const Monomial& g) const { return substitute_m_min({g}); }

  /// Leading term at m = n^x.
  [[nodiscard]] Monomial at(const Rational& x) const;
  /// Numeric value with natural log and C = c_value.
  [[nodiscard]] double evaluate(double n, double m, double c_value) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Rate&, const Rate&) = default;

 private:
  std::vector<Monomial> terms_;
};

std::string to_string(const Monomial& t);

/// A triple (M, gamma, tau) for the r-uniform expansion of a core pattern.
struct BalancedSpec {
  std::string pattern;
  /// Uniformity of the expansion the triple is about.
  int r = 2;
  /// Uniformity and r-density of the core pattern.
  int core_uniformity = 2;
  Rational core_density;
  Rate max_edges;  // M(n)
  Rate gamma;      // gamma(n)
  Rate tau;        // tau(n, m)
  std::string note;
};

/// Density of the r-uniform expansion described by spec.
Rational spec_density(const BalancedSpec& spec);

/// Empty when tau has only non-positive m exponents; otherwise a message.
std::optional<std::string> spec_violation(const BalancedSpec& spec);

/// K_{s,t} graph spec: M = n^{2-1/s}, tau = max{n^{(2st-s-t)/(st-1)}, m^{1-s} n^{2s-1}}.
BalancedSpec kst_graph_spec(int s, int t);
/// theta_{a,b} graph spec: M = n^{1+1/b}, tau = max{n^{1+(a-1)/(ab-1)}, m^{-1/(b-1)} n^{1+2/(b-1)}}.
BalancedSpec theta_graph_spec(int a, int b);
/// Even cycle C_{2l} graph spec, shape only: M = n^{1+1/l}, tau = n^{1+1/(2l-1)}, polylog gamma.
BalancedSpec cycle_graph_spec(int half_length);
/// Optimal-shape spec: M = n^{r-1}, gamma polylog, tau = n^{r-1/d} polylog.
BalancedSpec optimal_spec(const std::string& pattern, int r, const Rational& core_density, int core_uniformity);

/// Shadow lift from spec.r to r (> spec.r). Throws PreconditionError naming
/// the failed hypothesis "(b)", "(c)" or "(d)".
BalancedSpec lift_shadow(const BalancedSpec& spec, int r);

/// Greedy lift from spec.r to spec.r + 1 with the given A(n, m). The window
/// m n^{1-r} <= A <= m / (M_{r-1} log n) is checked at both ends of the
/// regime (default edge_regime(r)); failures throw PreconditionError naming
/// the endpoint. With polylog_window the upper bound compares n-exponents only.
BalancedSpec lift_greedy(const BalancedSpec& spec, const Rate& a, std::optional<Regime> regime = std::nullopt,
                         bool polylog_window = false);

/// A = m^{d} n^{1 - r d} maxed with m n^{1-r}, d the density at uniformity r.
Rate optimal_chain_a(const Rational& density, int r);
/// A = m^{(ab-1)/(2ab-a-1)} n^{-(ab+a-2)/(2ab-a-1)}.
Rate theta_lift_a(int a, int b);
/// A = m^{2(st-1)/Den} n^{-(s+1)(st-1)/Den}, Den = 2(st-1)(r-s) + (s-1)^2 t.
Rate kst_lift_a(int s, int t, int r);
/// A = (m/n)^{1/(r-1)}.
Rate comparison_a(int r);

/// Iterated greedy lifts from an optimal-shape spec up to uniformity r. The
/// first entry is the input. Throws PreconditionError when max_degree < 2 or
/// the input is not of optimal shape.
std::vector<BalancedSpec> optimal_chain(const BalancedSpec& spec, int r, std::size_t max_degree);

/// Bundled chains from the graph specs.
std::vector<BalancedSpec> cycle_chain(int half_length, int r);
std::vector<BalancedSpec> theta_chain(int a, int b, int r);
std::vector<BalancedSpec> kst_chain(int s, int t, int r);

struct LiftComparison {
  BalancedSpec shadow;
  BalancedSpec greedy;
  Regime regime;
  /// Greedy tau exponent <= shadow tau exponent at both ends.
  bool greedy_at_most_shadow = false;
};

/// Lifts spec to spec.r + 1 both ways, the greedy one with comparison_a.
LiftComparison compare_lifts(const BalancedSpec& spec);

/// Floor exponent r - 1/d and tau's exponent at m = n^r (its smallest value
/// when tau is non-increasing in m).
struct FloorCheck {
  Rational floor;
  Rational tau_exponent;
  bool holds = false;
};
FloorCheck balancedness_floor(const BalancedSpec& spec);

struct StatedExponent {
  std::string source;
  Rational stated;
  bool agrees = false;
};

struct ThresholdReport {
  std::string pattern;
  int r = 2;
  Rational density;            // d_r of the expansion
  Rational threshold_exponent; // p* = n^{threshold_exponent} = n^{-1/d}
  Rational plateau_exponent;   // r - 1/d
  Rational sparse_low;         // the lower regime is n^{sparse_low} << p << p*
  Monomial tau_at_m;           // leading term of tau at m = M(n)
  Rational m_exponent;
  bool tau_matches_plateau = false;
  std::string shape;
  std::vector<StatedExponent> stated;
};

/// Threshold data for spec, with the density taken from the registry pattern
/// and compared against any exponent stated for that family.
ThresholdReport turan_threshold(const BalancedSpec& spec, const PatternInfo& core);

struct KstAnalysis {
  int s = 2, t = 2, r = 3;
  Rational alpha;
  Rational beta;
  Rational p_exponent;  // (s-1)^2 t / (2(st-1)(r-s) + 2(s-1)^2 t)
  Rational criterion;   // s + 1 + (s-1)/(t-1) - (s+t-2)/(st-1)
  bool beta_at_least_alpha = false;
  bool criterion_holds = false;
  bool criterion_agrees = false;
  /// (s-1)/(t-1) - (s+t-2)/(st-1) + 1/((t-1)(st-1)) against t(s^2-2s+3-t)/((t-1)(st-1)).
  Rational closing_lhs;
  Rational closing_rhs;
  bool closing_identity = false;
  bool closing_sign_agrees = false;
  /// x and y from the substitution against their simplified forms.
  Rational x_product, x_closed, y_product, y_closed;
  bool xy_identity = false;
  /// r - 2 + (s+t-2)/(st-1) against r - s + (s-1)^2 t/(st-1).
  bool cancellation_identity = false;
  /// A^{-1/d} m has exponents (x, y).
  bool greedy_term_identity = false;
};

/// Requires t >= s >= 2 and r >= s + 1.
KstAnalysis kst_threshold_analysis(int s, int t, int r);

struct ThetaIdentity {
  BigInt lhs;  // (a-1)(2ab-a-1) - (ab-1)a
  BigInt rhs;  // (b-1)a^2 - 2ab + a + 1
  bool equal = false;
  bool positive = false;
};
ThetaIdentity theta_identity(int a, int b);

/// log|containers| <= (log n)^{C} tau(n, m).
Rate container_iteration_count(const Rate& tau, int r);

/// Smallest i with (1 - eps (log n)^{-log_power})^i C(n, r) < m.
std::uint64_t container_stopping_time(const Rational& eps, int log_power, const Rational& log_n, std::uint64_t n, int r,
                                      const Rational& m);

}  // namespace hyperturan
