#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "netgame/exact.hpp"
#include "netgame/generators.hpp"
#include "netgame/json_io.hpp"
#include "oracles.hpp"

using namespace netgame;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("netgame_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd = std::string(NETGAME_CLI_PATH) + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json load_json(const std::string& path) { return json::parse(read_file(path)); }

}  // namespace

TEST_CASE("profile json round trip", "[json_cli]") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    StrategyProfile sp = oracles::random_profile(6, 10, seed);
    sp.normalize();
    GameParams gp{0.75, 0.4};
    json j = profile_to_json(sp, gp);
    std::optional<GameParams> params;
    StrategyProfile back = profile_from_json(j, &params);
    REQUIRE(back.n == sp.n);
    REQUIRE(back.purchases == sp.purchases);
    REQUIRE(params.has_value());
    REQUIRE(params->edge_cost == gp.edge_cost);
    REQUIRE(params->spread_prob == gp.spread_prob);
  }
}

TEST_CASE("profile json rejects malformed input naming the field", "[json_cli]") {
  REQUIRE_THROWS_WITH(profile_from_json(json{{"purchases", json::array()}}),
                      Catch::Matchers::ContainsSubstring("\"n\""));
  REQUIRE_THROWS_WITH(profile_from_json(json{{"n", 3}}),
                      Catch::Matchers::ContainsSubstring("\"purchases\""));
  json bad = {{"n", 2}, {"purchases", {{1}, {0}}}, {"params", {{"c", 1.0}}}};
  REQUIRE_THROWS_WITH(profile_from_json(bad, nullptr), Catch::Matchers::ContainsSubstring("params"));
  json self = {{"n", 2}, {"purchases", {{0}, {}}}};
  REQUIRE_THROWS_AS(profile_from_json(self), validation_error);
}

TEST_CASE("cli generate then exact utility matches the library", "[json_cli]") {
  TempDir tmp;
  const std::string graph = tmp.file("star.json");
  REQUIRE(run_cli("generate --family hub-spoke --n 9 --out " + graph) == 0);

  const std::string out = tmp.file("util.json");
  REQUIRE(run_cli("utility --graph " + graph + " --mode exact --c 0.5 --p 0.6 --out " + out) == 0);
  json j = load_json(out);
  const double expected_welfare = closed_form_star_benefit(9, 0.6) - 8 * 0.5;
  REQUIRE(j["welfare"].get<double>() == Catch::Approx(expected_welfare).margin(1e-9));
  REQUIRE(j.contains("manifest"));
  REQUIRE(j["manifest"]["inputs"][0]["path"] == graph);
}

TEST_CASE("cli simulate is reproducible modulo the timestamp", "[json_cli]") {
  TempDir tmp;
  const std::string graph = tmp.file("cycle.json");
  REQUIRE(run_cli("generate --family cycle --n 6 --c 0.5 --p 0.4 --out " + graph) == 0);

  const std::string out1 = tmp.file("r1.json");
  const std::string args = "simulate --graph " + graph + " --samples 20000 --seed 7 --out " + out1;
  REQUIRE(run_cli(args) == 0);
  json a = load_json(out1);
  REQUIRE(run_cli(args) == 0);  // identical command, fresh run
  json b = load_json(out1);
  a["manifest"].erase("timestamp");
  b["manifest"].erase("timestamp");
  REQUIRE(a.dump() == b.dump());

  const std::string out3 = tmp.file("r3.json");
  REQUIRE(run_cli("simulate --graph " + graph + " --samples 20000 --seed 8 --out " + out3) == 0);
  json c = load_json(out3);
  REQUIRE(a["welfare"]["mean"].get<double>() != c["welfare"]["mean"].get<double>());
}

TEST_CASE("cli exit codes distinguish validation and cap errors", "[json_cli]") {
  TempDir tmp;
  const std::string bad = tmp.file("bad.json");
  write_file(bad, "{\"n\": 2, \"purchases\": [[0],[]]}");  // self-purchase
  REQUIRE(run_cli("utility --graph " + bad + " --mode exact --c 1 --p 0.5") == 2);

  const std::string missing = tmp.file("missing.json");
  REQUIRE(run_cli("utility --graph " + missing + " --mode exact --c 1 --p 0.5") == 2);

  const std::string dense = tmp.file("dense.json");
  REQUIRE(run_cli("generate --family complete --n 8 --out " + dense) == 0);
  REQUIRE(run_cli("utility --graph " + dense + " --mode exact --c 1 --p 0.5") == 3);

  REQUIRE(run_cli("utility --graph " + dense + " --mode bogus --c 1 --p 0.5") == 2);
  REQUIRE(run_cli("nonsense") == 2);
}

TEST_CASE("cli check-eq reports the two-player violation", "[json_cli]") {
  TempDir tmp;
  const std::string graph = tmp.file("pair.json");
  write_file(graph, "{\"n\": 2, \"purchases\": [[1],[]]}");
  const std::string out = tmp.file("eq.json");
  REQUIRE(run_cli("check-eq --graph " + graph +
                  " --class drop --mode exact --c 0.25 --p 0.5 --out " + out) == 0);
  json j = load_json(out);
  REQUIRE(j["violations"].get<int>() == 1);
  REQUIRE(j["is_equilibrium"].get<bool>() == false);
  REQUIRE(j["reports"][0]["verdict"] == "BeneficialViolation");
}

TEST_CASE("cli sweep emits one row per grid cell in order", "[json_cli]") {
  TempDir tmp;
  const std::string out = tmp.file("sweep.csv");
  REQUIRE(run_cli("sweep --family cycle --n 5 --p 0.2:0.6:0.2 --c 0.5:1.0:0.25 --check drop --out " +
                  out) == 0);
  std::ifstream in(out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  REQUIRE(rows.size() == 1 + 3 * 3);  // header + |p grid| * |c grid|
  REQUIRE(rows[0] == "p,c,violations,worst_margin,is_equilibrium");
  REQUIRE(rows[1].substr(0, 8) == "0.2,0.5,");
  REQUIRE(rows[2].substr(0, 9) == "0.2,0.75,");
}

TEST_CASE("cli gw writes the tail table", "[json_cli]") {
  TempDir tmp;
  const std::string out = tmp.file("gw.csv");
  REQUIRE(run_cli("gw --offspring bernoulli-sum --m 1 --q 0.3 --runs 20000 --kmax 5 "
                  "--theta-max 30 --seed 4 --out " + out) == 0);
  std::ifstream in(out);
  std::string line;
  std::vector<std::string> rows;
  bool saw_h = false;
  while (std::getline(in, line)) {
    if (line.rfind("# h=", 0) == 0) saw_h = true;
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  REQUIRE(saw_h);
  REQUIRE(rows.size() == 1 + 6);  // header + k = 0..5
  REQUIRE(rows[0] == "k,empirical,bound,ci_half,satisfied");
}

TEST_CASE("cli analyze mincut and robustness", "[json_cli]") {
  TempDir tmp;
  const std::string graph = tmp.file("cyc.json");
  REQUIRE(run_cli("generate --family cycle --n 8 --out " + graph) == 0);

  const std::string out = tmp.file("mc.json");
  REQUIRE(run_cli("analyze --graph " + graph + " --op mincut --out " + out) == 0);
  REQUIRE(load_json(out)["alpha"].get<int>() == 2);

  const std::string rb = tmp.file("rb.json");
  REQUIRE(run_cli("analyze --graph " + graph + " --op robustness --edge 0 1 --out " + rb) == 0);
  REQUIRE(load_json(rb)["robustness"].get<int>() == 1);

  const std::string conn = tmp.file("conn.csv");
  REQUIRE(run_cli("analyze --graph " + graph +
                  " --op connectivity --p-range 0.2:0.8:0.3 --samples 2000 --csv --out " + conn) == 0);
  std::ifstream in(conn);
  std::string line;
  int data_rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#' && line.rfind("p,", 0) != 0) ++data_rows;
  }
  REQUIRE(data_rows == 3);
}
