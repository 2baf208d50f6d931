// SPDX-License-Identifier: Apache-2.0
#include "hyperturan/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace hyperturan;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hyperturan-cli-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("density command") {
  const auto c4 = run({"density", "--pattern", "C4", "--expand-to", "3"});
  CHECK(c4.code == kExitOk);
  CHECK(c4.out.find("d_3(C4^(3)) = 3/5") != std::string::npos);
  CHECK(c4.out.find("identity OK") != std::string::npos);

  const auto k23 = run({"density", "--pattern", "K23", "--expand-to", "6"});
  CHECK(k23.code == kExitOk);
  CHECK(k23.out.find("4 + 3/5") != std::string::npos);

  const auto edge = run({"density", "--pattern", "edge", "--expand-to", "3"});
  CHECK(edge.code == kExitUsage);
  CHECK(edge.err.find("error:") == 0);

  const auto json_out = run({"density", "--pattern", "C6", "--expand-to", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(json_out.out);
  CHECK(j.at("command") == "density");
  CHECK(j.contains("config_hash"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"density", "--format", "xml", "--pattern", "C4"}).code == kExitUsage);
  CHECK(run({"density", "--pattern", "nonsense"}).code == kExitUsage);
  CHECK(run({"supersat", "--fixture", "c4-gadget"}).code == kExitUsage);
  CHECK(run({"supersat", "--fixture", "no-such-fixture", "--pattern", "C4", "--expand-to", "3"}).code == kExitUsage);
}

TEST_CASE("lift command") {
  const auto r = run({"lift", "--pattern", "C6", "--expand-to", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("threshold n^(-14/5), plateau n^(6/5)") != std::string::npos);
  const auto cmp = run({"lift", "--pattern", "C4", "--expand-to", "3", "--lift", "compare"});
  CHECK(cmp.code == kExitOk);
}

TEST_CASE("supersat on bundled fixtures") {
  const auto gadget = run({"supersat", "--fixture", "c4-gadget", "--pattern", "C4", "--expand-to", "3"});
  CHECK(gadget.code == kExitOk);
  CHECK(gadget.out.find("expanded copies: 16") != std::string::npos);

  const auto strict = run({"supersat", "--fixture", "c4-gadget", "--pattern", "C4", "--expand-to", "3", "--mode", "strict"});
  CHECK(strict.code == kExitViolation);
  CHECK(strict.err.find("violation:") == 0);

  // Every pair of the tight path has codegree at most 2, so A = 2 fails.
  const auto path = run({"supersat", "--fixture", "tight-path", "--pattern", "P3", "--expand-to", "3", "--method", "greedy"});
  CHECK(path.code == kExitViolation);

  const auto k7 = run({"supersat", "--fixture", "k7", "--pattern", "P3", "--expand-to", "3", "--method", "greedy"});
  CHECK(k7.code == kExitOk);
  CHECK(k7.out.find("replay ok") != std::string::npos);
}

TEST_CASE("run directory artifacts are reproducible") {
  const auto a = scratch("a");
  const auto b = scratch("b");
  const std::vector<std::string> base = {"sweep",   "--pattern", "C4",      "--expand-to", "3",   "--n",
                                         "6",       "--p-grid",  "1/2,1", "--seeds",     "1,2"};
  auto with_out = [&](const fs::path& dir) {
    auto args = base;
    args.push_back("--out");
    args.push_back(dir.string());
    return run(args);
  };
  REQUIRE(with_out(a).code == kExitOk);
  REQUIRE(with_out(b).code == kExitOk);
  for (const auto* f : {"config.json", "result.json", "table.csv", "log.txt"}) CHECK(fs::exists(a / f));
  CHECK(slurp(a / "result.json") == slurp(b / "result.json"));
  CHECK(slurp(a / "config.json") == slurp(b / "config.json"));

  // Replaying the saved config gives the same result.
  const auto c = scratch("c");
  const auto replay = run({"sweep", "--config", (a / "config.json").string(), "--out", c.string()});
  CHECK(replay.code == kExitOk);
  CHECK(slurp(c / "result.json") == slurp(a / "result.json"));

  const auto wrong = run({"density", "--config", (a / "config.json").string()});
  CHECK(wrong.code == kExitUsage);
  fs::remove_all(a.parent_path());
}

TEST_CASE("config json round trip and hash") {
  ExperimentConfig c;
  c.command = "sweep";
  c.pattern = "K23";
  c.expand_to = 4;
  c.n = 9;
  c.p_grid = {"1/3", "1"};
  c.seeds = {4, 5};
  c.seed = 77;
  const auto back = config_from_json(to_json(c));
  CHECK(to_json(back) == to_json(c));
  CHECK(config_hash(back) == config_hash(c));
  auto other = c;
  other.seed = 78;
  CHECK(config_hash(other) != config_hash(c));
  CHECK(config_from_json(nlohmann::json{{"config", to_json(c)}}).pattern == "K23");
}

TEST_CASE("input files are not modified") {
  const auto fixture = fixture_dir() / "tight-path.txt";
  const auto before = slurp(fixture);
  run({"supersat", "--host", fixture.string(), "--pattern", "P3", "--expand-to", "3", "--method", "greedy"});
  CHECK(slurp(fixture) == before);
}

TEST_CASE("installed binary exit codes") {
  const std::string bin = HYPERTURAN_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("density --pattern C4 --expand-to 3") == kExitOk);
  CHECK(status("density --pattern edge --expand-to 3") == kExitUsage);
  CHECK(status("supersat --fixture c4-gadget --pattern C4 --expand-to 3 --mode strict") == kExitViolation);
}
