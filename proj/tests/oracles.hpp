// Test-only brute-force oracles, kept independent of the library algorithms
// they cross-check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/rng.hpp"

namespace oracles {

// Minimum edge cut by enumerating all proper bipartitions. n <= ~16.
inline int brute_min_cut(const netgame::Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  const std::uint32_t half = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 1; mask < half; ++mask) {
    // vertex n-1 is always on side 0, so each bipartition appears once
    int crossing = 0;
    for (const netgame::Edge& e : g.edges()) {
      const bool su = e.u < n - 1 && (mask >> e.u & 1);
      const bool sv = e.v < n - 1 && (mask >> e.v & 1);
      if (su != sv) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

// True iff u and v are connected in g after deleting `removed` vertices and
// ignoring the direct edge u-v.
inline bool connected_avoiding(const netgame::Graph& g, int u, int v,
                               const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{u};
  seen[static_cast<std::size_t>(u)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.adjacency(x)) {
      (void)e;
      if ((x == u && w == v) || (x == v && w == u)) continue;  // skip the direct edge
      if (removed[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return seen[static_cast<std::size_t>(v)];
}

// Minimum number of vertex deletions (excluding u, v) that make the direct
// edge the only u-v path, by subset enumeration. n <= ~12.
inline int brute_edge_robustness(const netgame::Graph& g, int u, int v) {
  const int n = g.vertex_count();
  std::vector<int> candidates;
  for (int x = 0; x < n; ++x) {
    if (x != u && x != v) candidates.push_back(x);
  }
  const int k = static_cast<int>(candidates.size());
  for (int size = 0; size <= k; ++size) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<char> removed(static_cast<std::size_t>(n), 0);
      for (int b = 0; b < k; ++b) {
        if (mask >> b & 1) removed[static_cast<std::size_t>(candidates[static_cast<std::size_t>(b)])] = 1;
      }
      if (!connected_avoiding(g, u, v, removed)) return size;
    }
  }
  return k;
}

// Exact Pr[G[p] connected] by enumerating retained-edge subsets.
inline double enumerate_connectivity_probability(const netgame::Graph& g, double p) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : g.adjacency(x)) {
        if (!(mask >> e & 1) || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached == n) {
      const int kept = __builtin_popcount(mask);
      total += std::pow(p, kept) * std::pow(1.0 - p, m - kept);
    }
  }
  return total;
}

// Welfare through a different algebraic route than the library oracle: for
// each retained subset and each dead component D, the survivors contribute
// sum over surviving components of size^2, weighted by |D| seeds.
inline double enumerate_welfare(const netgame::StrategyProfile& sp, const netgame::GameParams& gp) {
  const netgame::Graph g = netgame::induced_graph(sp);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  double benefit_total = 0.0;

  auto labels_of = [&](const std::vector<char>& edge_on, const std::vector<char>& vertex_dead) {
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
      if (vertex_dead[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) continue;
      label[static_cast<std::size_t>(s)] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : g.adjacency(x)) {
          if (!edge_on[static_cast<std::size_t>(e)]) continue;
          if (vertex_dead[static_cast<std::size_t>(w)] || label[static_cast<std::size_t>(w)] >= 0) continue;
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
      ++next;
    }
    return label;
  };

  const std::vector<char> no_dead(static_cast<std::size_t>(n), 0);
  std::vector<char> all_edges(static_cast<std::size_t>(m), 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<char> kept(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) kept[static_cast<std::size_t>(e)] = mask >> e & 1;
    const int on = __builtin_popcount(mask);
    const double w = std::pow(gp.spread_prob, on) * std::pow(1.0 - gp.spread_prob, m - on);

    std::vector<int> kept_label = labels_of(kept, no_dead);
    int comp_count = 0;
    for (int v = 0; v < n; ++v) comp_count = std::max(comp_count, kept_label[static_cast<std::size_t>(v)] + 1);
    for (int dead_comp = 0; dead_comp < comp_count; ++dead_comp) {
      std::vector<char> dead(static_cast<std::size_t>(n), 0);
      int dead_size = 0;
      for (int v = 0; v < n; ++v) {
        if (kept_label[static_cast<std::size_t>(v)] == dead_comp) {
          dead[static_cast<std::size_t>(v)] = 1;
          ++dead_size;
        }
      }
      std::vector<int> alive_label = labels_of(all_edges, dead);
      std::vector<int> sizes;
      for (int v = 0; v < n; ++v) {
        int l = alive_label[static_cast<std::size_t>(v)];
        if (l < 0) continue;
        if (l >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(l) + 1, 0);
        sizes[static_cast<std::size_t>(l)] += 1;
      }
      double sq = 0.0;
      for (int s : sizes) sq += static_cast<double>(s) * s;
      benefit_total += w * dead_size * sq;
    }
  }
  benefit_total /= n;

  double cost = 0.0;
  for (int i = 0; i < sp.n; ++i) cost += sp.purchases[static_cast<std::size_t>(i)].size() * gp.edge_cost;
  return benefit_total - cost;
}

// Seeded random strategy profile with n players and at most max_edges edges.
inline netgame::StrategyProfile random_profile(int n, int max_edges, std::uint64_t seed) {
  netgame::SplitMix64 rng(netgame::derive_seed(seed, 0x50524f46u));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    netgame::StrategyProfile sp = netgame::StrategyProfile::empty(n);
    const double q = std::min(1.0, 2.0 / n);
    int edges = 0;
    for (int i = 0; i < n && edges <= max_edges; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (rng.uniform01() < q) {
          sp.purchases[static_cast<std::size_t>(i)].push_back(j);
          ++edges;
        }
      }
    }
    if (netgame::induced_graph(sp).edge_count() <= max_edges) return sp;
  }
  return netgame::StrategyProfile::empty(n);
}

// Seeded random simple graph with exactly m distinct edges (buyer = lower id).
inline netgame::StrategyProfile random_graph_profile(int n, int m, std::uint64_t seed) {
  if (m > n * (n - 1) / 2) m = n * (n - 1) / 2;
  netgame::SplitMix64 rng(netgame::derive_seed(seed, 0x474e4d00u));
  netgame::StrategyProfile sp = netgame::StrategyProfile::empty(n);
  netgame::Graph g(n);
  int added = 0;
  while (added < m) {
    int u = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));
    int v = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    sp.purchases[static_cast<std::size_t>(std::min(u, v))].push_back(std::max(u, v));
    ++added;
  }
  sp.normalize();
  return sp;
}

// Random connected graph: a random spanning tree plus extra random edges.
inline netgame::StrategyProfile random_connected_profile(int n, int extra_edges,
                                                         std::uint64_t seed) {
  netgame::SplitMix64 rng(netgame::derive_seed(seed, 0x434f4e4eu));
  netgame::StrategyProfile sp = netgame::StrategyProfile::empty(n);
  netgame::Graph g(n);
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(v)));
    g.add_edge(parent, v);
    sp.purchases[static_cast<std::size_t>(std::min(parent, v))].push_back(std::max(parent, v));
  }
  int added = 0;
  int guard = 0;
  while (added < extra_edges && ++guard < 10000) {
    int u = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));
    int v = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    sp.purchases[static_cast<std::size_t>(std::min(u, v))].push_back(std::max(u, v));
    ++added;
  }
  sp.normalize();
  return sp;
}

}  // namespace oracles
