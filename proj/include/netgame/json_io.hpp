#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netgame/errors.hpp"
#include "netgame/game.hpp"
#include "netgame/monte_carlo.hpp"

namespace netgame {

inline constexpr const char* kVersion = "0.1.0";

// Graph/profile schema shared by every CLI command:
//   { "n": int, "purchases": [[int, ...], ...], "params": {"c": float, "p": float} }
// params is optional; commands may supply c/p via flags instead.
inline nlohmann::json profile_to_json(const StrategyProfile& sp,
                                      const std::optional<GameParams>& params = std::nullopt) {
  nlohmann::json j;
  j["n"] = sp.n;
  j["purchases"] = sp.purchases;
  if (params) {
    j["params"] = {{"c", params->edge_cost}, {"p", params->spread_prob}};
  }
  return j;
}

inline StrategyProfile profile_from_json(const nlohmann::json& j,
                                         std::optional<GameParams>* params_out = nullptr) {
  if (!j.is_object()) throw validation_error("graph json: expected an object");
  if (!j.contains("n")) throw validation_error("graph json: missing field \"n\"");
  if (!j["n"].is_number_integer()) throw validation_error("graph json: field \"n\" must be an integer");
  if (!j.contains("purchases")) throw validation_error("graph json: missing field \"purchases\"");
  if (!j["purchases"].is_array()) {
    throw validation_error("graph json: field \"purchases\" must be an array of arrays");
  }

  StrategyProfile sp;
  sp.n = j["n"].get<int>();
  for (const auto& row : j["purchases"]) {
    if (!row.is_array()) {
      throw validation_error("graph json: field \"purchases\" must be an array of arrays");
    }
    std::vector<int> s;
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw validation_error("graph json: \"purchases\" entries must be integers");
      }
      s.push_back(x.get<int>());
    }
    sp.purchases.push_back(std::move(s));
  }
  sp.validate();
  sp.normalize();

  if (params_out) params_out->reset();
  if (j.contains("params")) {
    const auto& pj = j["params"];
    if (!pj.is_object() || !pj.contains("c") || !pj.contains("p")) {
      throw validation_error("graph json: field \"params\" must carry \"c\" and \"p\"");
    }
    GameParams gp;
    gp.edge_cost = pj["c"].get<double>();
    gp.spread_prob = pj["p"].get<double>();
    gp.validate();
    if (params_out) *params_out = gp;
  }
  return sp;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("file: cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("file: cannot write \"" + path + "\"");
  out << content;
}

inline StrategyProfile load_profile(const std::string& path,
                                    std::optional<GameParams>* params_out = nullptr) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error("graph json: parse failure in \"" + path + "\": " + e.what());
  }
  return profile_from_json(j, params_out);
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

// Provenance block embedded in every output. Re-running the recorded command
// with the same seed and inputs reproduces the payload bit-exactly; only the
// timestamp field is outside the determinism contract.
struct RunManifest {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, content hash)
  std::string version = kVersion;
  std::string timestamp;

  void add_input(const std::string& path) {
    inputs.emplace_back(path, hex64(fnv1a64(read_file(path))));
  }

  static std::string now_utc() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }
};

inline nlohmann::json manifest_to_json(const RunManifest& m) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& [path, hash] : m.inputs) {
    inputs.push_back({{"path", path}, {"fnv1a64", hash}});
  }
  return nlohmann::json{{"command", m.command},
                        {"seed", m.seed},
                        {"inputs", inputs},
                        {"version", m.version},
                        {"timestamp", m.timestamp}};
}

inline nlohmann::json estimate_to_json(const UtilityEstimate& e) {
  return nlohmann::json{{"mean", e.mean},
                        {"half_width", e.half_width},
                        {"samples", e.samples},
                        {"confidence", e.confidence},
                        {"seed", e.rng_seed}};
}

}  // namespace netgame
