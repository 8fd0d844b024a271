#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/game.hpp"
#include "netgame/rng.hpp"

namespace netgame {

enum class Family {
  Empty,
  HubSpoke,
  Cycle,
  LinearPaths,
  Tree,
  Complete,
  ErdosRenyi,
  TwoHubSpoke,
};

struct TopologySpec {
  Family family = Family::Empty;
  int n = 0;
  int arity = 2;           // Tree only
  double q = 0.0;          // ErdosRenyi only
  std::uint64_t seed = 0;  // ErdosRenyi only
};

inline StrategyProfile make_empty(int n) { return StrategyProfile::empty(n); }

// Hub is vertex 0; every spoke buys its own edge to the hub.
inline StrategyProfile make_hub_spoke(int n) {
  if (n < 3) throw validation_error("hub-spoke: n must be >= 3");
  StrategyProfile sp = StrategyProfile::empty(n);
  for (int i = 1; i < n; ++i) sp.purchases[static_cast<std::size_t>(i)] = {0};
  return sp;
}

// Vertex i buys the edge to its successor i+1 mod n.
inline StrategyProfile make_cycle(int n) {
  if (n < 3) throw validation_error("cycle: n must be >= 3");
  StrategyProfile sp = StrategyProfile::empty(n);
  for (int i = 0; i < n; ++i) sp.purchases[static_cast<std::size_t>(i)] = {(i + 1) % n};
  return sp;
}

// Two hub vertices joined by three vertex-disjoint paths of equal length m:
// the two arcs of an outer cycle of length 2m plus an interior path with
// m-1 vertices. Requires n = 3m - 1 with m >= 2. Along each path the edges
// are bought from the endpoints inward, so the hubs buy three edges each and
// the midpoint vertices buy none.
inline StrategyProfile make_linear_paths(int n) {
  const int m = (n + 1) / 3;
  if (m < 2 || 3 * m - 1 != n) {
    throw validation_error("linear-paths: n must equal 3m-1 for some m >= 2 (5, 8, 11, ...)");
  }
  StrategyProfile sp = StrategyProfile::empty(n);
  // Outer cycle 0..2m-1 with hubs at 0 and m; interior vertices 2m..3m-2.
  auto buy_path = [&](const std::vector<int>& path) {
    const int len = static_cast<int>(path.size()) - 1;
    for (int t = 0; t < len; ++t) {
      int a = path[static_cast<std::size_t>(t)];
      int b = path[static_cast<std::size_t>(t + 1)];
      int buyer = (2 * t < len) ? a : b;
      int other = (buyer == a) ? b : a;
      sp.purchases[static_cast<std::size_t>(buyer)].push_back(other);
    }
  };
  std::vector<int> arc1, arc2, interior;
  for (int i = 0; i <= m; ++i) arc1.push_back(i);
  arc2.push_back(0);
  for (int i = 2 * m - 1; i >= m; --i) arc2.push_back(i);
  interior.push_back(0);
  for (int i = 0; i < m - 1; ++i) interior.push_back(2 * m + i);
  interior.push_back(m);
  buy_path(arc1);
  buy_path(arc2);
  buy_path(interior);
  sp.normalize();
  sp.validate();
  return sp;
}

// Balanced arity-ary tree; each non-root vertex buys the edge to its parent.
inline StrategyProfile make_tree(int n, int arity) {
  if (n < 1) throw validation_error("tree: n must be >= 1");
  if (arity < 1) throw validation_error("tree: arity must be >= 1");
  StrategyProfile sp = StrategyProfile::empty(n);
  for (int i = 1; i < n; ++i) {
    sp.purchases[static_cast<std::size_t>(i)] = {(i - 1) / arity};
  }
  return sp;
}

// Lower-indexed endpoint buys each edge.
inline StrategyProfile make_complete(int n) {
  if (n < 1) throw validation_error("complete: n must be >= 1");
  StrategyProfile sp = StrategyProfile::empty(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) sp.purchases[static_cast<std::size_t>(i)].push_back(j);
  }
  return sp;
}

// Two disjoint hub-spoke components of size n/2 each.
inline StrategyProfile make_two_hub_spoke(int n) {
  if (n < 6 || n % 2 != 0) throw validation_error("two-hub-spoke: n must be even and >= 6");
  const int half = n / 2;
  StrategyProfile sp = StrategyProfile::empty(n);
  for (int i = 1; i < half; ++i) sp.purchases[static_cast<std::size_t>(i)] = {0};
  for (int i = half + 1; i < n; ++i) sp.purchases[static_cast<std::size_t>(i)] = {half};
  return sp;
}

// Each unordered pair independently with probability q; the lower-indexed
// endpoint is the buyer. Deterministic for a fixed seed.
inline StrategyProfile erdos_renyi(int n, double q, std::uint64_t seed) {
  if (n < 1) throw validation_error("erdos-renyi: n must be >= 1");
  if (!(q >= 0.0 && q <= 1.0)) throw validation_error("erdos-renyi: q must lie in [0, 1]");
  StrategyProfile sp = StrategyProfile::empty(n);
  SplitMix64 rng(derive_seed(seed, 0x45520000u));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() < q) sp.purchases[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return sp;
}

inline StrategyProfile generate(const TopologySpec& spec) {
  switch (spec.family) {
    case Family::Empty: {
      if (spec.n < 1) throw validation_error("empty: n must be >= 1");
      return make_empty(spec.n);
    }
    case Family::HubSpoke: return make_hub_spoke(spec.n);
    case Family::Cycle: return make_cycle(spec.n);
    case Family::LinearPaths: return make_linear_paths(spec.n);
    case Family::Tree: return make_tree(spec.n, spec.arity);
    case Family::Complete: return make_complete(spec.n);
    case Family::ErdosRenyi: return erdos_renyi(spec.n, spec.q, spec.seed);
    case Family::TwoHubSpoke: return make_two_hub_spoke(spec.n);
  }
  throw validation_error("family: unknown topology family");
}

inline Family family_from_name(const std::string& name) {
  if (name == "empty") return Family::Empty;
  if (name == "hub-spoke") return Family::HubSpoke;
  if (name == "cycle") return Family::Cycle;
  if (name == "linear-paths") return Family::LinearPaths;
  if (name == "tree") return Family::Tree;
  if (name == "complete") return Family::Complete;
  if (name == "erdos-renyi") return Family::ErdosRenyi;
  if (name == "two-hub-spoke") return Family::TwoHubSpoke;
  throw validation_error("family: unknown family \"" + name +
                         "\" (expected empty|hub-spoke|cycle|linear-paths|tree|complete|"
                         "erdos-renyi|two-hub-spoke)");
}

}  // namespace netgame
