// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/rates.hpp"

#include "hyperturan/error.hpp"
#include "hyperturan/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace hyperturan {

LogPower operator+(const LogPower& a, const LogPower& b) {
  return {a.constant + b.constant, a.symbolic + b.symbolic};
}

LogPower operator*(const LogPower& a, const Rational& k) { return {a.constant * k, a.symbolic * k}; }

int compare(const LogPower& a, const LogPower& b) {
  if (a.symbolic != b.symbolic) return a.symbolic < b.symbolic ? -1 : 1;
  if (a.constant != b.constant) return a.constant < b.constant ? -1 : 1;
  return 0;
}

Regime edge_regime(int r) { return {Rational(r - 1), Rational(r)}; }

int compare_at(const Monomial& a, const Monomial& b, const Rational& x) {
  const Rational ea = a.n_exp + a.m_exp * x;
  const Rational eb = b.n_exp + b.m_exp * x;
  if (ea != eb) return ea < eb ? -1 : 1;
  return compare(a.log, b.log);
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  return {a.n_exp + b.n_exp, a.m_exp + b.m_exp, a.log + b.log};
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  return std::tie(a.m_exp, a.n_exp, a.log.symbolic, a.log.constant) <
         std::tie(b.m_exp, b.n_exp, b.log.symbolic, b.log.constant);
}

std::string exponent(const Rational& q) {
  const std::string s = to_string(q);
  if (q > 0 && denominator(q) == 1) return s;
  return "(" + s + ")";
}

std::string log_exponent(const LogPower& p) {
  std::string out;
  if (p.symbolic != 0) {
    if (p.symbolic == 1) {
      out = "C";
    } else if (p.symbolic == -1) {
      out = "-C";
    } else {
      out = to_string(p.symbolic) + "C";
    }
  }
  if (p.constant != 0) {
    if (!out.empty() && p.constant > 0) out += "+";
    out += to_string(p.constant);
  }
  if (out == "1") return out;
  return "(" + out + ")";
}

const Monomial kM{Rational(0), Rational(1), {}};

}  // namespace

std::string to_string(const Monomial& t) {
  std::string out;
  auto add = [&](const std::string& piece) { out += (out.empty() ? "" : " ") + piece; };
  if (t.n_exp != 0) add("n^" + exponent(t.n_exp));
  if (t.m_exp != 0) add("m^" + exponent(t.m_exp));
  if (t.log.constant != 0 || t.log.symbolic != 0) add("log(n)^" + log_exponent(t.log));
  return out.empty() ? "1" : out;
}

Rate::Rate(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), monomial_less);
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

Rate Rate::monomial(Rational n_exp, Rational m_exp, LogPower log) {
  return Rate({Monomial{std::move(n_exp), std::move(m_exp), std::move(log)}});
}

Rate Rate::polylog(Rational constant, Rational symbolic) {
  return monomial(Rational(0), Rational(0), {std::move(constant), std::move(symbolic)});
}

bool Rate::depends_on_m() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Monomial& t) { return t.m_exp != 0; });
}

Rate Rate::normalized(const Regime& regime) const {
  std::vector<Monomial> keep;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < terms_.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = compare_at(terms_[j], terms_[i], regime.lo) >= 0 && compare_at(terms_[j], terms_[i], regime.hi) >= 0;
    }
    if (!dominated) keep.push_back(terms_[i]);
  }
  return Rate(std::move(keep));
}

Rate operator*(const Rate& a, const Rate& b) {
  std::vector<Monomial> out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back(multiply(x, y));
  }
  return Rate(std::move(out));
}

Rate Rate::max_with(const Rate& other) const {
  std::vector<Monomial> out = terms_;
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return Rate(std::move(out));
}

Rate Rate::pow(const Rational& e) const {
  if (e < 0 && !single()) throw ParameterError("negative power of a maximum of " + std::to_string(terms_.size()) + " monomials");
  std::vector<Monomial> out;
  for (const auto& t : terms_) out.push_back({t.n_exp * e, t.m_exp * e, t.log * e});
  return Rate(std::move(out));
}

Rate Rate::substitute_m_min(const std::vector<Monomial>& g) const {
  if (g.empty()) throw ParameterError("substitution needs at least one monomial");
  if (g.size() > 1) {
    for (const auto& t : terms_) {
      if (t.m_exp > 0) throw ParameterError("substituting a minimum needs a rate non-increasing in m");
    }
  }
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    for (const auto& h : g) {
      out.push_back({t.n_exp + t.m_exp * h.n_exp, t.m_exp * h.m_exp, t.log + h.log * t.m_exp});
      if (t.m_exp == 0) break;
    }
  }
  return Rate(std::move(out));
}

Monomial Rate::at(const Rational& x) const {
  if (terms_.empty()) throw ParameterError("empty rate");
  Monomial best = terms_.front();
  for (const auto& t : terms_) {
    if (compare_at(t, best, x) > 0) best = t;
  }
  return best;
}

double Rate::evaluate(double n, double m, double c_value) const {
  double best = 0;
  const double ln = std::log(n);
  for (const auto& t : terms_) {
    const double v = std::pow(n, to_double(t.n_exp)) * std::pow(m, to_double(t.m_exp)) *
                     std::pow(ln, to_double(t.log.constant) + to_double(t.log.symbolic) * c_value);
    best = std::max(best, v);
  }
  return best;
}

std::string Rate::to_string() const {
  if (terms_.size() == 1) return hyperturan::to_string(terms_.front());
  std::string out = "max{";
  for (std::size_t i = 0; i < terms_.size(); ++i) out += (i ? ", " : "") + hyperturan::to_string(terms_[i]);
  return out + "}";
}

Rational spec_density(const BalancedSpec& spec) {
  return expanded_density(spec.core_density, spec.core_uniformity, spec.r);
}

std::optional<std::string> spec_violation(const BalancedSpec& spec) {
  for (const auto& t : spec.tau.terms()) {
    if (t.m_exp > 0) return "tau term " + to_string(t) + " increases with m";
  }
  return std::nullopt;
}

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

bool non_decreasing(const Monomial& t, const Rational& n_exp) {
  return n_exp > 0 || (n_exp == 0 && compare(t.log, {}) >= 0);
}

const Monomial kLog{Rational(0), Rational(0), {Rational(1), Rational(0)}};
const Monomial kLogC{Rational(0), Rational(0), {Rational(0), Rational(1)}};

}  // namespace

BalancedSpec kst_graph_spec(int s, int t) {
  if (s < 2 || t < s) throw ParameterError("K_{s,t} spec needs t >= s >= 2");
  BalancedSpec spec;
  spec.pattern = "K" + std::to_string(s) + "," + std::to_string(t);
  spec.core_density = q(s * t - 1, s + t - 2);
  spec.max_edges = Rate::monomial(2 - q(1, s));
  spec.gamma = Rate::one();
  spec.tau = Rate({{q(2 * s * t - s - t, s * t - 1), q(0), {}}, {q(2 * s - 1), q(1 - s), {}}}).normalized(edge_regime(2));
  spec.note = "graph K_{s,t} balanced supersaturation";
  return spec;
}

BalancedSpec theta_graph_spec(int a, int b) {
  if (a < 2 || b < 2) throw ParameterError("theta spec needs a, b >= 2");
  BalancedSpec spec;
  spec.pattern = "theta" + std::to_string(a) + "," + std::to_string(b);
  spec.core_density = q(a * b - 1, a * (b - 1));
  spec.max_edges = Rate::monomial(1 + q(1, b));
  spec.gamma = Rate::one();
  spec.tau = Rate({{1 + q(a - 1, a * b - 1), q(0), {}}, {1 + q(2, b - 1), -q(1, b - 1), {}}}).normalized(edge_regime(2));
  spec.note = "graph theta_{a,b} balanced supersaturation";
  return spec;
}

BalancedSpec cycle_graph_spec(int half_length) {
  if (half_length < 2) throw ParameterError("cycle spec needs length 2l with l >= 2");
  const int l = half_length;
  BalancedSpec spec;
  spec.pattern = "C" + std::to_string(2 * l);
  spec.core_density = q(2 * l - 1, 2 * l - 2);
  spec.max_edges = Rate::monomial(1 + q(1, l));
  spec.gamma = Rate::polylog(q(0), q(1));
  spec.tau = Rate::monomial(1 + q(1, 2 * l - 1), q(0), {q(0), q(1)});
  spec.note = "graph even cycle shape (tau constant in m)";
  return spec;
}

BalancedSpec optimal_spec(const std::string& pattern, int r, const Rational& core_density, int core_uniformity) {
  BalancedSpec spec;
  spec.pattern = pattern;
  spec.r = r;
  spec.core_uniformity = core_uniformity;
  spec.core_density = core_density;
  spec.max_edges = Rate::monomial(q(r - 1));
  spec.gamma = Rate::polylog(q(0), q(1));
  spec.tau = Rate::monomial(q(r) - 1 / spec_density(spec), q(0), {q(0), q(1)});
  spec.note = "optimal shape";
  return spec;
}

BalancedSpec lift_shadow(const BalancedSpec& spec, int r) {
  const int r0 = spec.r;
  if (r0 < 2 || r <= r0) throw ParameterError("shadow lift needs r > r0 >= 2");
  const Rational shift(r - r0, r - 1);
  for (const auto& t : spec.max_edges.terms()) {
    if (t.m_exp != 0) throw ParameterError("M must depend on n only");
    if (!non_decreasing(t, t.n_exp - shift)) throw PreconditionError("(b) M(n) n^{-(r-r0)/(r-1)} is not non-decreasing");
  }
  for (const auto& t : spec.gamma.terms()) {
    if (t.m_exp != 0 || !non_decreasing(t, t.n_exp)) throw PreconditionError("(c) gamma is not non-decreasing");
  }
  for (const auto& t : spec.tau.terms()) {
    if (t.m_exp > 0) throw PreconditionError("(d) tau is not non-increasing in m");
    if (!non_decreasing(t, t.n_exp + t.m_exp * shift)) {
      throw PreconditionError("(d) tau(nx, m x^{(r-r0)/(r-1)}) is not non-decreasing in x");
    }
  }
  const Regime regime = edge_regime(r);
  const Rate logc({kLogC});
  BalancedSpec out = spec;
  out.r = r;
  out.max_edges = (spec.max_edges.pow(Rational(r - 1, r0 - 1)) * Rate::monomial(-Rational(r - r0, r0 - 1)))
                      .max_with(Rate::monomial(q(r - 1)))
                      .normalized(regime) *
                  logc;
  out.max_edges = out.max_edges.normalized(regime);
  out.gamma = (spec.gamma * logc).normalized(regime);
  const Monomial inner{shift, Rational(r0 - 1, r - 1), {q(0), q(-1)}};
  out.tau = (spec.tau.substitute_m(inner) * logc).normalized(regime);
  out.note = "shadow lift " + std::to_string(r0) + " -> " + std::to_string(r);
  return out;
}

BalancedSpec lift_greedy(const BalancedSpec& spec, const Rate& a, std::optional<Regime> regime_override,
                         bool polylog_window) {
  const int prev = spec.r;
  if (prev < 2) throw ParameterError("greedy lift needs r - 1 >= 2");
  const int r = prev + 1;
  for (const auto& t : spec.gamma.terms()) {
    if (t.m_exp != 0 || !non_decreasing(t, t.n_exp)) throw PreconditionError("(b) gamma is not non-decreasing");
  }
  for (const auto& t : spec.tau.terms()) {
    if (t.m_exp > 0) throw PreconditionError("(c) tau is not non-increasing in m");
    if (!non_decreasing(t, t.n_exp)) throw PreconditionError("(c) tau is not non-decreasing in n");
  }
  const Regime regime = regime_override.value_or(edge_regime(r));
  const Rate window_a = a.normalized(regime);
  const Monomial floor{q(1 - r), q(1), {}};
  for (const Rational& x : {regime.lo, regime.hi}) {
    const std::string where = "m = n^" + exponent(x);
    if (compare_at(window_a.at(x), floor, x) < 0) throw PreconditionError("(d) window lower bound A >= m n^{1-r} fails at " + where);
    for (const auto& aj : window_a.terms()) {
      for (const auto& mk : spec.max_edges.terms()) {
        const Monomial lhs = multiply(multiply(aj, mk), kLog);
        const bool over = polylog_window ? lhs.n_exp + lhs.m_exp * x > x : compare_at(lhs, kM, x) > 0;
        if (over) {
          throw PreconditionError("(d) window upper bound A <= m/(M_{r-1} C log n) fails at " + where);
        }
      }
    }
  }
  BalancedSpec out = spec;
  out.r = r;
  const Rational d = spec_density(out);
  out.max_edges = Rate::monomial(q(r - 1));
  out.gamma = (spec.gamma * Rate({kLog})).normalized(regime);
  if (!window_a.single()) throw ParameterError("A must reduce to one monomial on the regime to take A^{-1/d}");
  const Rate first = window_a.pow(-1 / d) * Rate({kM});
  std::vector<Monomial> inner;
  for (const auto& aj : window_a.terms()) inner.push_back({-aj.n_exp, 1 - aj.m_exp, (aj.log + kLog.log) * q(-1)});
  const Rate second = spec.tau.substitute_m_min(inner) * Rate({kLog});
  out.tau = first.max_with(second).normalized(regime);
  out.note = "greedy lift " + std::to_string(prev) + " -> " + std::to_string(r) + " with A = " + window_a.to_string();
  return out;
}

Rate optimal_chain_a(const Rational& density, int r) {
  return Rate({{1 - density * r, density, {}}, {q(1 - r), q(1), {}}});
}

Rate theta_lift_a(int a, int b) {
  const long long den = 2LL * a * b - a - 1;
  return Rate::monomial(-q(a * b + a - 2, den), q(a * b - 1, den));
}

Rate kst_lift_a(int s, int t, int r) {
  const long long st1 = 1LL * s * t - 1;
  const long long den = 2 * st1 * (r - s) + 1LL * (s - 1) * (s - 1) * t;
  return Rate::monomial(-q((s + 1) * st1, den), q(2 * st1, den));
}

Rate comparison_a(int r) { return Rate::monomial(-q(1, r - 1), q(1, r - 1)); }

std::vector<BalancedSpec> optimal_chain(const BalancedSpec& spec, int r, std::size_t max_degree) {
  if (max_degree < 2) throw PreconditionError("optimal chain needs maximum degree at least 2");
  if (r < spec.r) throw ParameterError("target uniformity below the spec's");
  const Regime regime = edge_regime(spec.r);
  const Rate tau = spec.tau.normalized(regime);
  const Rate m = spec.max_edges.normalized(regime);
  const Rational want = spec.r - 1 / spec_density(spec);
  if (!tau.single() || tau.depends_on_m() || tau.terms().front().n_exp != want) {
    throw PreconditionError("tau is not n^{r-1/d} up to polylog");
  }
  if (!m.single() || m.terms().front().n_exp != spec.r - 1) throw PreconditionError("M is not n^{r-1} up to polylog");
  std::vector<BalancedSpec> chain{spec};
  for (int k = spec.r + 1; k <= r; ++k) {
    BalancedSpec next = chain.back();
    next.r = k;
    const Rational d = spec_density(next);
    try {
      chain.push_back(lift_greedy(chain.back(), optimal_chain_a(d, k)));
    } catch (const PreconditionError& e) {
      throw PreconditionError("optimal chain step to r = " + std::to_string(k) + ": " + e.what());
    }
  }
  return chain;
}

std::vector<BalancedSpec> cycle_chain(int half_length, int r) {
  std::vector<BalancedSpec> chain{cycle_graph_spec(half_length)};
  for (int k = 3; k <= r; ++k) chain.push_back(lift_shadow(chain.front(), k));
  return chain;
}

std::vector<BalancedSpec> theta_chain(int a, int b, int r) {
  std::vector<BalancedSpec> chain{theta_graph_spec(a, b)};
  if (r < 3) return chain;
  chain.push_back(lift_greedy(chain.front(), theta_lift_a(a, b)));
  const auto rest = optimal_chain(chain.back(), r, static_cast<std::size_t>(a));
  chain.insert(chain.end(), rest.begin() + 1, rest.end());
  return chain;
}

std::vector<BalancedSpec> kst_chain(int s, int t, int r) {
  std::vector<BalancedSpec> chain{kst_graph_spec(s, t)};
  if (s > 2 && r >= s) chain.push_back(lift_shadow(chain.front(), s));
  for (int k = s + 1; k <= r; ++k) chain.push_back(lift_greedy(chain.back(), kst_lift_a(s, t, k)));
  return chain;
}

LiftComparison compare_lifts(const BalancedSpec& spec) {
  const int r = spec.r + 1;
  LiftComparison out;
  out.shadow = lift_shadow(spec, r);
  const Rational lo = std::max(Rational(r - 1), out.shadow.max_edges.at(Rational(0)).n_exp);
  out.regime = {lo, Rational(r)};
  out.greedy = lift_greedy(spec, comparison_a(r), out.regime, true);
  out.greedy_at_most_shadow = true;
  for (const Rational& x : {out.regime.lo, out.regime.hi}) {
    const Monomial g = out.greedy.tau.at(x);
    const Monomial s = out.shadow.tau.at(x);
    if (g.n_exp + g.m_exp * x > s.n_exp + s.m_exp * x) out.greedy_at_most_shadow = false;
  }
  return out;
}

FloorCheck balancedness_floor(const BalancedSpec& spec) {
  FloorCheck c;
  c.floor = spec.r - 1 / spec_density(spec);
  const Rational x(spec.r);
  const Monomial lead = spec.tau.at(x);
  c.tau_exponent = lead.n_exp + lead.m_exp * x;
  c.holds = c.tau_exponent >= c.floor;
  return c;
}

ThresholdReport turan_threshold(const BalancedSpec& spec, const PatternInfo& core) {
  ThresholdReport rep;
  rep.pattern = core.name;
  rep.r = spec.r;
  rep.density = pattern_density(core, spec.r).density;
  if (rep.density != spec_density(spec)) {
    throw InvariantError("spec density " + to_string(spec_density(spec)) + " differs from pattern density " +
                         to_string(rep.density));
  }
  const Rational inv = 1 / rep.density;
  const int r = spec.r;
  rep.threshold_exponent = -inv;
  rep.plateau_exponent = r - inv;
  rep.sparse_low = Rational(-r);
  rep.m_exponent = spec.max_edges.at(Rational(0)).n_exp;
  rep.tau_at_m = spec.tau.at(rep.m_exponent);
  rep.tau_matches_plateau = rep.tau_at_m.n_exp + rep.tau_at_m.m_exp * rep.m_exponent == rep.plateau_exponent;
  rep.shape = "max{Theta(p n^" + exponent(rep.m_exponent) + "), n^" + exponent(rep.plateau_exponent) +
              " polylog} if p >> n^" + exponent(rep.threshold_exponent) + "; (1+o(1)) p C(n," + std::to_string(r) +
              ") if n^" + exponent(rep.sparse_low) + " << p << n^" + exponent(rep.threshold_exponent);

  auto state = [&](const std::string& source, const Rational& plateau) {
    rep.stated.push_back({source + " (plateau)", plateau, plateau == rep.plateau_exponent});
    rep.stated.push_back({source + " (threshold)", plateau - r, plateau - r == rep.threshold_exponent});
  };
  const auto& p = core.params;
  switch (core.family) {
    case PatternFamily::Cycle:
      if (p.at(0) % 2 == 0) state("loose even cycles", 1 + q(1, p[0] - 1));
      break;
    case PatternFamily::Theta:
      state("theta expansions", 1 + q(p.at(0) - 1, p[0] * p.at(1) - 1));
      break;
    case PatternFamily::CompleteBipartite: {
      const int s = p.at(0);
      const int t = p.at(1);
      if (s == 2) state("K_{2,t} expansions", q(3 * t - 1, 2 * t - 1));
      if (s >= 2) state("K_{s,t} expansions", 2 + q(s + t - 2, s * t - 1));
      break;
    }
    default:
      break;
  }
  return rep;
}

KstAnalysis kst_threshold_analysis(int s, int t, int r) {
  if (s < 2 || t < s) throw ParameterError("need t >= s >= 2");
  if (r < s + 1) throw ParameterError("need r >= s + 1");
  KstAnalysis k;
  k.s = s;
  k.t = t;
  k.r = r;
  const Rational st1(s * t - 1);
  const Rational sq = Rational((s - 1) * (s - 1) * t);
  const Rational den = 2 * st1 * (r - s) + sq;
  k.alpha = Rational(r - 1) - Rational(2 * s * t - s - t) / st1;
  k.p_exponent = sq / (2 * st1 * (r - s) + 2 * sq);
  k.beta = (Rational(r - 1) - Rational(s + 1, 2)) / (1 - k.p_exponent);
  k.criterion = Rational(s + 1) + Rational(s - 1, t - 1) - Rational(s + t - 2) / st1;
  k.beta_at_least_alpha = k.beta >= k.alpha;
  k.criterion_holds = Rational(r) >= k.criterion;
  k.criterion_agrees = k.beta_at_least_alpha == k.criterion_holds;

  k.closing_lhs = Rational(s - 1, t - 1) - Rational(s + t - 2) / st1 + 1 / (Rational(t - 1) * st1);
  k.closing_rhs = Rational(t * (s * s - 2 * s + 3 - t)) / (Rational(t - 1) * st1);
  k.closing_identity = k.closing_lhs == k.closing_rhs;
  k.closing_sign_agrees = (k.closing_rhs <= 0) == (t >= s * s - 2 * s + 3);

  const Rational den_prev = 2 * st1 * (r - 1 - s) + sq;
  const Rational a_m = 2 * st1 / den;
  const Rational a_n = -(s + 1) * st1 / den;
  const Rational x_prev = -sq / den_prev;
  const Rational y_prev = Rational(s + 1) * (st1 * (r - 1 - s) + sq) / den_prev;
  k.x_product = x_prev * (1 - a_m);
  k.x_closed = -sq / den;
  k.y_product = x_prev * (-a_n) + y_prev;
  k.y_closed = Rational(s + 1) * (st1 * (r - s) + sq) / den;
  k.xy_identity = k.x_product == k.x_closed && k.y_product == k.y_closed;

  const Rational inv_d = 1 / expanded_density(st1 / Rational(s + t - 2), 2, r);
  k.cancellation_identity = inv_d == Rational(r - 2) + Rational(s + t - 2) / st1 &&
                            inv_d == Rational(r - s) + sq / st1;
  const Rate term = kst_lift_a(s, t, r).pow(-inv_d) * Rate({kM});
  k.greedy_term_identity = term == Rate::monomial(k.y_closed, k.x_closed);
  return k;
}

ThetaIdentity theta_identity(int a, int b) {
  const BigInt A(a);
  const BigInt B(b);
  ThetaIdentity id;
  id.lhs = (A - 1) * (2 * A * B - A - 1) - (A * B - 1) * A;
  id.rhs = (B - 1) * A * A - 2 * A * B + A + 1;
  id.equal = id.lhs == id.rhs;
  id.positive = id.lhs > 0;
  return id;
}

Rate container_iteration_count(const Rate& tau, int r) {
  return (tau * Rate::polylog(q(0), q(1))).normalized(edge_regime(r));
}

std::uint64_t container_stopping_time(const Rational& eps, int log_power, const Rational& log_n, std::uint64_t n, int r,
                                      const Rational& m) {
  if (log_n <= 0) throw ParameterError("log n must be positive");
  const Rational factor = 1 - eps / pow_int(log_n, log_power);
  if (factor <= 0 || factor >= 1) throw ParameterError("shrink factor must lie in (0, 1)");
  if (m <= 0) throw ParameterError("m must be positive");
  Rational size(binomial(n, static_cast<std::uint64_t>(r)));
  std::uint64_t i = 0;
  constexpr std::uint64_t kLimit = 1000000;
  while (size >= m) {
    size *= factor;
    if (++i > kLimit) throw ParameterError("stopping time exceeds the iteration limit");
  }
  return i;
}

}  // namespace hyperturan
