// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/cli.hpp"

#include "hyperturan/error.hpp"
#include "hyperturan/expansion.hpp"
#include "hyperturan/io.hpp"
#include "hyperturan/patterns.hpp"
#include "hyperturan/rates.hpp"
#include "hyperturan/regularize.hpp"
#include "hyperturan/rturan.hpp"
#include "hyperturan/serialize.hpp"
#include "hyperturan/supersat.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#ifndef HYPERTURAN_SOURCE_DATA_DIR
#define HYPERTURAN_SOURCE_DATA_DIR "data/fixtures"
#endif

namespace hyperturan {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Outcome {
  json result;
  std::string text;
  std::string csv;
  int code = kExitOk;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path resolve_host(const ExperimentConfig& c) {
  if (!c.host_file.empty()) return c.host_file;
  if (c.fixture.empty()) throw UsageError("supersat needs --fixture or --host");
  for (const char* ext : {".json", ".txt"}) {
    const auto p = fixture_dir() / (c.fixture + ext);
    if (std::filesystem::exists(p)) return p;
  }
  throw UsageError("unknown fixture '" + c.fixture + "' in " + fixture_dir().string());
}

PatternInfo load_pattern(const ExperimentConfig& c) {
  if (!c.pattern_file.empty()) {
    PatternInfo info;
    info.name = std::filesystem::path(c.pattern_file).stem().string();
    info.graph = load_hypergraph(c.pattern_file).without_isolated();
    return info;
  }
  if (c.pattern.empty()) throw UsageError("--pattern or --pattern-file is required");
  return parse_pattern(c.pattern);
}

Rational rational_or(const std::string& text, const Rational& fallback) {
  return text.empty() ? fallback : parse_rational(text);
}

std::string spec_row(const BalancedSpec& s) {
  const FloorCheck f = balancedness_floor(s);
  std::ostringstream row;
  row << s.r << ",\"" << s.max_edges.to_string() << "\",\"" << s.gamma.to_string() << "\",\"" << s.tau.to_string()
      << "\"," << to_string(spec_density(s)) << ',' << to_string(f.floor) << ',' << to_string(f.tau_exponent) << ','
      << (f.holds ? 1 : 0) << '\n';
  return row.str();
}

Outcome cmd_density(const ExperimentConfig& c) {
  const PatternInfo info = load_pattern(c);
  const Hypergraph& f = info.graph;
  if (f.num_edges() < 2) throw UsageError("|F| >= 2 required, pattern '" + info.name + "' has " +
                                          std::to_string(f.num_edges()) + " edge(s)");
  Outcome o;
  std::ostringstream text;
  const int r0 = f.uniformity();
  const DensityReport core = r_density(f);
  o.result["pattern"] = info.name;
  o.result["core"] = to_json(core);
  text << "d_" << r0 << "(" << info.name << ") = " << to_string(core.density) << '\n';
  o.csv = "r0,r,core_density,expanded_density,inverse,closed_form,holds\n";
  const int r = c.expand_to > 0 ? c.expand_to : r0;
  if (r < r0) throw UsageError("--expand-to must be at least the pattern uniformity");
  const DensityRelation rel = check_density_relation(f, r);
  o.result["relation"] = to_json(rel);
  text << "d_" << r << "(" << info.name << "^(" << r << ")) = " << to_string(rel.expanded) << '\n';
  text << "1/d = " << to_string(rel.lhs) << " = " << (r - r0) << " + " << to_string(1 / rel.core_density) << '\n';
  text << "identity " << (rel.holds ? "OK" : "VIOLATED") << '\n';
  o.csv += std::to_string(r0) + ',' + std::to_string(r) + ',' + to_string(rel.core_density) + ',' +
           to_string(rel.expanded) + ',' + to_string(rel.lhs) + ',' + to_string(rel.rhs) + ',' +
           (rel.holds ? "1" : "0") + '\n';
  o.text = text.str();
  o.code = rel.holds ? kExitOk : kExitViolation;
  return o;
}

BalancedSpec family_spec(const PatternInfo& info) {
  switch (info.family) {
    case PatternFamily::Cycle:
      if (info.params[0] % 2 == 0 && info.params[0] >= 4) return cycle_graph_spec(info.params[0] / 2);
      break;
    case PatternFamily::CompleteBipartite:
      if (info.params[0] >= 2) return kst_graph_spec(info.params[0], info.params[1]);
      break;
    case PatternFamily::Theta:
      return theta_graph_spec(info.params[0], info.params[1]);
    default:
      break;
  }
  throw UsageError("no bundled balanced spec for pattern '" + info.name + "'");
}

std::vector<BalancedSpec> family_chain(const PatternInfo& info, int r) {
  switch (info.family) {
    case PatternFamily::Cycle:
      if (info.params[0] % 2 == 0 && info.params[0] >= 4) return cycle_chain(info.params[0] / 2, r);
      break;
    case PatternFamily::CompleteBipartite:
      if (info.params[0] >= 2) return kst_chain(info.params[0], info.params[1], r);
      break;
    case PatternFamily::Theta:
      return theta_chain(info.params[0], info.params[1], r);
    default:
      break;
  }
  throw UsageError("no bundled balanced spec for pattern '" + info.name + "'");
}

Outcome cmd_lift(const ExperimentConfig& c) {
  const PatternInfo info = load_pattern(c);
  const BalancedSpec base = family_spec(info);
  const int r = c.expand_to > 0 ? c.expand_to : base.r + 1;
  if (r <= base.r) throw UsageError("--expand-to must exceed the base uniformity");
  Outcome o;
  std::ostringstream text;
  o.csv = "r,M,gamma,tau,density,floor,tau_exponent,floor_holds\n";
  std::vector<BalancedSpec> specs;
  json extra;
  if (c.lift == "chain") {
    specs = family_chain(info, r);
  } else if (c.lift == "shadow") {
    specs = {base, lift_shadow(base, r)};
  } else if (c.lift == "compare") {
    auto chain = family_chain(info, r - 1);
    const LiftComparison cmp = compare_lifts(chain.back());
    specs = {chain.back(), cmp.shadow, cmp.greedy};
    extra = to_json(cmp);
    text << "greedy tau <= shadow tau on the regime: " << (cmp.greedy_at_most_shadow ? "yes" : "no") << '\n';
  } else {
    throw UsageError("--lift must be chain, shadow or compare");
  }
  json chain = json::array();
  bool floors = true;
  for (const auto& s : specs) {
    const FloorCheck f = balancedness_floor(s);
    floors = floors && f.holds;
    json j = to_json(s);
    j["floor"] = to_json(f);
    chain.push_back(j);
    text << "r=" << s.r << "  M=" << s.max_edges.to_string() << "  gamma=" << s.gamma.to_string()
         << "  tau=" << s.tau.to_string() << "  floor " << to_string(f.floor) << (f.holds ? " ok" : " FAILS") << '\n';
    o.csv += spec_row(s);
  }
  o.result["pattern"] = info.name;
  o.result["lift"] = c.lift;
  o.result["chain"] = chain;
  if (!extra.is_null()) o.result["comparison"] = extra;
  const ThresholdReport t = turan_threshold(specs.back(), info);
  o.result["threshold"] = to_json(t);
  text << "threshold n^(" << to_string(t.threshold_exponent) << "), plateau n^(" << to_string(t.plateau_exponent)
       << ")\n"
       << t.shape << '\n';
  for (const auto& s : t.stated) {
    text << "stated " << s.source << ": " << to_string(s.stated) << (s.agrees ? " agrees" : " DISAGREES") << '\n';
  }
  o.text = text.str();
  o.code = floors ? kExitOk : kExitViolation;
  return o;
}

Outcome cmd_supersat(const ExperimentConfig& c) {
  const PatternInfo info = load_pattern(c);
  const Hypergraph host = load_hypergraph(resolve_host(c));
  const ExpansionMode mode = c.mode == "strict" ? ExpansionMode::Strict : ExpansionMode::Desk;
  if (c.mode != "strict" && c.mode != "desk") throw UsageError("--mode must be strict or desk");
  const std::size_t cap = c.cap == 0 ? kNoCap : c.cap;
  Outcome o;
  std::ostringstream text;
  o.result["pattern"] = info.name;
  o.result["host"] = {{"r", host.uniformity()}, {"n", host.num_vertices()}, {"edges", host.num_edges()}};
  o.result["method"] = c.method;
  o.result["mode"] = c.mode;
  std::shared_ptr<const Hypergraph> work;
  std::optional<CopyCollection> collection;

  if (c.method == "shadow") {
    const Hypergraph partite = max_partite_subgraph(host, 64, c.seed);
    const RegularizedSlice slice = superregularize(partite);
    o.result["regularized"] = {{"edges", slice.subgraph.num_edges()}, {"levels", slice.levels},
                               {"slack", rational_json(slice.slack)}, {"pruned", slice.pruned}};
    const int r = slice.subgraph.uniformity();
    const int r0 = info.graph.uniformity();
    if (r0 >= r) throw UsageError("shadow method needs a pattern of lower uniformity than the host");
    // Core parts: the r0 parts whose shadow graph holds the most copies of F.
    std::vector<int> best_parts;
    std::size_t best_copies = 0;
    for (int mask = 0; mask < (1 << r); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != r0) continue;
      std::vector<int> chosen;
      for (int i = 0; i < r; ++i) {
        if (mask >> i & 1) chosen.push_back(i);
      }
      const std::size_t k = enumerate_copies(shadow_graph(slice.subgraph, chosen), info.graph).size();
      if (best_parts.empty() || k > best_copies) {
        best_parts = chosen;
        best_copies = k;
      }
    }
    std::vector<int> relabel(static_cast<std::size_t>(r));
    int next = 0;
    for (int p : best_parts) relabel[p] = next++;
    for (int i = 0; i < r; ++i) {
      if (std::find(best_parts.begin(), best_parts.end(), i) == best_parts.end()) relabel[i] = next++;
    }
    std::vector<int> partition;
    for (int p : slice.subgraph.partition()) partition.push_back(relabel[p]);
    work = std::make_shared<const Hypergraph>(slice.subgraph.with_partition(partition));
    o.result["core_parts"] = best_parts;
    std::vector<int> parts(static_cast<std::size_t>(r0));
    std::iota(parts.begin(), parts.end(), 0);
    const auto degrees = shadow_degrees(*work, r0, parts);
    if (degrees.empty()) throw DegenerateInputError("regularized host has no shadows on the first parts");
    std::size_t low = degrees.front().second, high = low;
    for (const auto& [s, d] : degrees) {
      low = std::min(low, d);
      high = std::max(high, d);
    }
    const CopyCollection base = enumerate_copies(shadow_graph(*work, parts), info.graph);
    text << "regularized host: " << work->num_edges() << " edges, codegrees in [" << low << ", " << high << "], "
         << base.size() << " base copies\n";
    if (base.empty()) {
      o.result["verdict"] = nullptr;
      text << "no base copies; nothing to expand\n";
      o.text = text.str();
      return o;
    }
    const ShadowExpansion ex =
        shadow_expand(work, base, Rational(static_cast<long long>(low)), Rational(static_cast<long long>(high)),
                      {mode, cap, c.seed});
    o.result["expansion"] = to_json(ex);
    text << "expanded copies: " << ex.copies.size() << (ex.full_census ? " (full census)" : " (sampled)")
         << ", dead ends " << ex.dead_ends << '\n';
    if (ex.full_census) {
      bool transfer = true;
      for (const auto& t : ex.transfer) transfer = transfer && t.holds;
      text << "count bound " << (ex.count_bound_met ? "met" : "MISSED") << ", delta transfer "
           << (transfer ? "holds" : "FAILS") << '\n';
    }
    const Rational m_hat(static_cast<long long>(base.host().num_edges()));
    const BalancedWitness bw = verify_balanced(base, rational_or(c.gamma, m_hat), rational_or(c.tau, m_hat));
    o.result["base_witness"] = to_json(bw, false);
    if (!ex.copies.empty()) {
      json rows = json::array();
      for (const auto& row : composed_bound_check(ex, bw.gamma, bw.tau)) rows.push_back(to_json(row));
      o.result["composed_rows"] = rows;
      collection = ex.copies;
    }
  } else if (c.method == "greedy") {
    work = std::make_shared<const Hypergraph>(host);
    const int r = host.uniformity();
    const Hypergraph pattern = expand(info.graph, r);
    const TightTreeCertificate cert = spanning_tight_tree(info.graph, r, info.tree_hint);
    const GreedyExpansion g = greedy_expand(work, pattern, cert, parse_rational(c.threshold), {cap, c.seed, {}});
    std::size_t replayed = 0;
    for (const auto& copy : g.copies.copies()) replayed += replay_certificate(*work, cert, copy) ? 1 : 0;
    o.result["expansion"] = to_json(g);
    o.result["replay_ok"] = replayed == g.copies.size();
    text << "greedy copies: " << g.copies.size() << " from " << g.embeddings << " embeddings, dead ends "
         << g.dead_ends << ", replay " << (replayed == g.copies.size() ? "ok" : "FAILED") << '\n';
    if (!g.copies.empty()) collection = g.copies;
  } else {
    throw UsageError("--method must be shadow or greedy");
  }

  o.csv = "i,measured,bound,holds\n";
  if (!collection) {
    o.result["verdict"] = nullptr;
    text << "no copies; balancedness not defined\n";
  } else {
    const Rational m(static_cast<long long>(work->num_edges()));
    const BalancedWitness w = verify_balanced(*collection, rational_or(c.gamma, m), rational_or(c.tau, m));
    o.result["witness"] = to_json(w, false);
    o.result["verdict"] = w.verdict;
    for (const auto& row : w.rows) {
      o.csv += std::to_string(row.i) + ',' + std::to_string(row.measured) + ',' + to_string(row.bound) + ',' +
               (row.holds ? "1" : "0") + '\n';
    }
    text << "balanced with gamma=" << to_string(w.gamma) << ", tau=" << to_string(w.tau) << ": "
         << (w.verdict ? "yes" : "no") << '\n';
  }
  o.text = text.str();
  return o;
}

Outcome cmd_sweep(const ExperimentConfig& c) {
  const PatternInfo info = load_pattern(c);
  if (c.n == 0) throw UsageError("--n is required");
  if (c.p_grid.empty() || c.seeds.empty()) throw UsageError("--p-grid and --seeds are required");
  SweepConfig cfg;
  cfg.pattern_name = info.name;
  cfg.core = info.graph;
  cfg.r = c.expand_to > 0 ? c.expand_to : info.graph.uniformity();
  cfg.n = c.n;
  for (const auto& p : c.p_grid) cfg.p_grid.push_back(parse_rational(p));
  cfg.seeds = c.seeds;
  cfg.budget = c.budget;
  const SweepResult res = sweep(cfg);
  Outcome o;
  o.result = to_json(res, false);
  o.result["pattern"] = info.name;
  std::ostringstream csv;
  write_sweep_csv(csv, res.rows, true);
  o.csv = csv.str();
  std::ostringstream text;
  text << "d = " << to_string(res.summary.density) << ", n^(-1/d) = " << res.summary.threshold << '\n';
  for (const auto& p : res.summary.points) {
    text << "p=" << to_string(p.p) << "  median |H|=" << p.median_edges << "  median ex=" << p.median_ex
         << (p.sparse ? "  (below threshold)" : "") << '\n';
  }
  text << "window n^-r << p << n^(-1/d): "
       << (res.summary.window_empty ? "no grid point inside" : "grid points inside") << '\n';
  std::size_t inexact = 0;
  for (const auto& row : res.rows) inexact += row.exact ? 0 : 1;
  if (inexact) text << inexact << " cell(s) hit the node budget\n";
  o.text = text.str();
  return o;
}

void write_run(const std::filesystem::path& dir, const ExperimentConfig& c, const Outcome& o, long long millis) {
  std::filesystem::create_directories(dir);
  const std::string hash = config_hash(c);
  std::ofstream(dir / "config.json") << json{{"config", to_json(c)}, {"hash", hash}}.dump(2) << '\n';
  std::ofstream(dir / "result.json") << json{{"command", c.command}, {"config_hash", hash}, {"result", o.result}}.dump(2)
                                     << '\n';
  std::ofstream(dir / "table.csv") << o.csv;
  std::ofstream(dir / "log.txt") << o.text << "exit " << o.code << "\nelapsed_ms " << millis << '\n';
}

void add_common(CLI::App* sub, ExperimentConfig& c, std::string& out_dir, std::string& format, std::string& config_file) {
  sub->add_option("--pattern", c.pattern, "Registry pattern, e.g. C4, K23, theta3,3, P4, M2");
  sub->add_option("--pattern-file", c.pattern_file, "Pattern hypergraph file (text or .json)");
  sub->add_option("--expand-to", c.expand_to, "Target uniformity r");
  sub->add_option("--seed", c.seed, "Seed for randomized steps");
  sub->add_option("--out", out_dir, "Write config.json, result.json, table.csv and log.txt here");
  sub->add_option("--format", format, "Stdout format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--config", config_file, "Load the run configuration from a config.json");
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  return {{"command", c.command}, {"pattern", c.pattern}, {"pattern_file", c.pattern_file},
          {"expand_to", c.expand_to}, {"n", c.n}, {"p_grid", c.p_grid}, {"seeds", c.seeds},
          {"budget", c.budget}, {"mode", c.mode}, {"method", c.method}, {"lift", c.lift},
          {"fixture", c.fixture}, {"host_file", c.host_file}, {"threshold", c.threshold},
          {"gamma", c.gamma}, {"tau", c.tau}, {"seed", c.seed}, {"cap", c.cap}};
}

ExperimentConfig config_from_json(const json& j) {
  const json& src = j.contains("config") ? j.at("config") : j;
  ExperimentConfig c;
  try {
    c.command = src.at("command").get<std::string>();
    c.pattern = src.value("pattern", "");
    c.pattern_file = src.value("pattern_file", "");
    c.expand_to = src.value("expand_to", 0);
    c.n = src.value("n", std::size_t{0});
    c.p_grid = src.value("p_grid", std::vector<std::string>{});
    c.seeds = src.value("seeds", std::vector<std::uint64_t>{});
    c.budget = src.value("budget", std::uint64_t{1'000'000});
    c.mode = src.value("mode", "desk");
    c.method = src.value("method", "shadow");
    c.lift = src.value("lift", "chain");
    c.fixture = src.value("fixture", "");
    c.host_file = src.value("host_file", "");
    c.threshold = src.value("threshold", "2");
    c.gamma = src.value("gamma", "");
    c.tau = src.value("tau", "");
    c.seed = src.value("seed", std::uint64_t{0});
    c.cap = src.value("cap", std::size_t{0});
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad config: ") + e.what());
  }
  return c;
}

std::string config_hash(const ExperimentConfig& c) {
  json j = to_json(c);
  json digests = json::object();
  for (const auto& path : {c.pattern_file, c.host_file}) {
    if (!path.empty() && std::filesystem::exists(path)) digests[path] = fnv1a_hex(read_file(path));
  }
  if (!c.fixture.empty() && c.host_file.empty()) {
    try {
      digests["fixture"] = fnv1a_hex(read_file(resolve_host(c)));
    } catch (const UsageError&) {
    }
  }
  j["inputs"] = digests;
  return fnv1a_hex(j.dump());
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("HYPERTURAN_DATA_DIR")) return env;
  return HYPERTURAN_SOURCE_DATA_DIR;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random Turan numbers of hypergraph expansions"};
  app.require_subcommand(1);
  ExperimentConfig c;
  std::string out_dir;
  std::string format = "text";
  std::string config_file;

  auto* density = app.add_subcommand("density", "r-density of a pattern and of its expansion");
  add_common(density, c, out_dir, format, config_file);

  auto* lift = app.add_subcommand("lift", "Balanced-supersaturation rate chains");
  add_common(lift, c, out_dir, format, config_file);
  lift->add_option("--lift", c.lift, "chain, shadow or compare")->check(CLI::IsMember({"chain", "shadow", "compare"}));

  auto* supersat = app.add_subcommand("supersat", "Build and verify a balanced copy collection");
  add_common(supersat, c, out_dir, format, config_file);
  supersat->add_option("--fixture", c.fixture, "Bundled host: c4-gadget, tight-path, k7");
  supersat->add_option("--host", c.host_file, "Host hypergraph file");
  supersat->add_option("--method", c.method, "shadow or greedy")->check(CLI::IsMember({"shadow", "greedy"}));
  supersat->add_option("--mode", c.mode, "strict or desk")->check(CLI::IsMember({"strict", "desk"}));
  supersat->add_option("--threshold", c.threshold, "Greedy codegree threshold A");
  supersat->add_option("--gamma", c.gamma, "gamma for the balancedness check (default |E(host)|)");
  supersat->add_option("--tau", c.tau, "tau for the balancedness check (default |E(host)|)");
  supersat->add_option("--cap", c.cap, "Per-seed sample cap, 0 for a full census");

  auto* sweep_cmd = app.add_subcommand("sweep", "Random Turan experiments over a p grid");
  add_common(sweep_cmd, c, out_dir, format, config_file);
  sweep_cmd->add_option("--n", c.n, "Number of vertices");
  sweep_cmd->add_option("--p-grid", c.p_grid, "Comma-separated probabilities, e.g. 1/10,1/2,1")->delimiter(',');
  sweep_cmd->add_option("--seeds", c.seeds, "Comma-separated seeds")->delimiter(',');
  sweep_cmd->add_option("--budget", c.budget, "Search node budget per cell");

  std::vector<std::string> argv_store{"hyperturan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  try {
    if (!config_file.empty()) {
      const std::string command = c.command;
      c = config_from_json(json::parse(read_file(config_file)));
      if (c.command != command) throw UsageError("config is for '" + c.command + "', not '" + command + "'");
    }
    for (auto& p : c.p_grid) p = to_string(parse_rational(p));
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (c.command == "density") o = cmd_density(c);
    if (c.command == "lift") o = cmd_lift(c);
    if (c.command == "supersat") o = cmd_supersat(c);
    if (c.command == "sweep") o = cmd_sweep(c);
    const auto millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!out_dir.empty()) write_run(out_dir, c, o, millis);
    if (format == "json") {
      out << json{{"command", c.command}, {"config_hash", config_hash(c)}, {"result", o.result}}.dump(2) << '\n';
    } else if (format == "csv") {
      out << o.csv;
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UndefinedDensityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "violation: " << e.what() << '\n';
    return kExitViolation;
  }
}

}  // namespace hyperturan
