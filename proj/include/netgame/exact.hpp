#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/game.hpp"
#include "netgame/graph.hpp"

namespace netgame {

struct ExactOptions {
  int edge_cap = 20;  // 2^cap retained-edge subsets are enumerated
};

namespace detail {

inline void check_edge_cap(int edge_count, int edge_cap) {
  if (edge_cap < 0 || edge_cap > 30) {
    throw validation_error("edge_cap: must lie in [0, 30]");
  }
  if (edge_count > edge_cap) {
    throw cap_exceeded("exact enumeration is capped at " + std::to_string(edge_cap) +
                       " edges (graph has " + std::to_string(edge_count) +
                       "); use monte_carlo_utilities for larger instances");
  }
}

// Flat union-find used inside the subset enumeration.
struct Dsu {
  std::vector<int> parent;
  std::vector<int> size;

  void reset(int n) {
    parent.resize(static_cast<std::size_t>(n));
    size.assign(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
  }
};

// Expected post-attack component size per vertex, averaged over the uniform
// seed, by enumerating all retained-edge subsets. benefit[i] is the exact
// value of (1/n) * sum_v E[CC_i(v)].
//
// Attacks seeded at v kill v's component D of the retained graph; survivors
// are then scored by their component size in the original graph minus D.
inline std::vector<double> exact_benefits(const Graph& g, double p, int edge_cap) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  check_edge_cap(m, edge_cap);

  std::vector<double> benefit(static_cast<std::size_t>(n), 0.0);
  Dsu kept_dsu, alive_dsu;

  if (p <= 0.0) {
    // Only the seed dies.
    for (int v = 0; v < n; ++v) {
      alive_dsu.reset(n);
      for (const Edge& e : g.edges()) {
        if (e.u != v && e.v != v) alive_dsu.unite(e.u, e.v);
      }
      for (int i = 0; i < n; ++i) {
        if (i == v) continue;
        benefit[static_cast<std::size_t>(i)] +=
            static_cast<double>(alive_dsu.size[static_cast<std::size_t>(alive_dsu.find(i))]);
      }
    }
    for (auto& b : benefit) b /= n;
    return benefit;
  }

  if (p >= 1.0) {
    // The seed's whole component dies; other components are untouched, so a
    // vertex in a component of size s scores s for each of the n - s outside
    // seeds and 0 otherwise.
    std::vector<int> sizes;
    std::vector<int> label = component_labels(g, &sizes);
    for (int i = 0; i < n; ++i) {
      int s = sizes[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
      benefit[static_cast<std::size_t>(i)] = static_cast<double>(s) * (n - s) / n;
    }
    return benefit;
  }

  const double q = 1.0 - p;
  std::vector<double> weight(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    weight[static_cast<std::size_t>(k)] = std::pow(p, k) * std::pow(q, m - k);
  }

  std::vector<int> roots;
  roots.reserve(static_cast<std::size_t>(n));
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const double w = weight[static_cast<std::size_t>(__builtin_popcountll(mask))];

    kept_dsu.reset(n);
    for (int e = 0; e < m; ++e) {
      if (mask & (std::uint64_t{1} << e)) kept_dsu.unite(g.edge(e).u, g.edge(e).v);
    }
    roots.clear();
    for (int v = 0; v < n; ++v) {
      if (kept_dsu.find(v) == v) roots.push_back(v);
    }

    // Each retained-graph component is the dead set for |D| of the n seeds.
    for (int r : roots) {
      const int dead_size = kept_dsu.size[static_cast<std::size_t>(r)];
      if (dead_size == n) continue;
      alive_dsu.reset(n);
      for (const Edge& e : g.edges()) {
        if (kept_dsu.find(e.u) != r && kept_dsu.find(e.v) != r) {
          alive_dsu.unite(e.u, e.v);
        }
      }
      const double scale = w * dead_size;
      for (int i = 0; i < n; ++i) {
        if (kept_dsu.find(i) == r) continue;
        benefit[static_cast<std::size_t>(i)] +=
            scale * alive_dsu.size[static_cast<std::size_t>(alive_dsu.find(i))];
      }
    }
  }
  for (auto& b : benefit) b /= n;
  return benefit;
}

}  // namespace detail

// Deterministic brute-force utilities: exact expectation over all 2^|E|
// retained-edge subsets and all n uniform seeds.
inline UtilityVector exact_utilities(const StrategyProfile& sp, const GameParams& gp,
                                     const ExactOptions& opt = {}) {
  sp.validate();
  gp.validate();
  Graph g = induced_graph(sp);
  return assemble_utilities(sp, gp, detail::exact_benefits(g, gp.spread_prob, opt.edge_cap));
}

// Exact E[max component size of G[p]], by the same subset enumeration.
inline double expected_largest_component(const Graph& g, double p, int edge_cap = 20) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 0) return 0.0;
  detail::check_edge_cap(m, edge_cap);
  if (p <= 0.0) return 1.0;
  std::vector<int> sizes;
  if (p >= 1.0) {
    component_labels(g, &sizes);
    return static_cast<double>(*std::max_element(sizes.begin(), sizes.end()));
  }

  const double q = 1.0 - p;
  std::vector<double> weight(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    weight[static_cast<std::size_t>(k)] = std::pow(p, k) * std::pow(q, m - k);
  }
  detail::Dsu dsu;
  double expected = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    dsu.reset(n);
    for (int e = 0; e < m; ++e) {
      if (mask & (std::uint64_t{1} << e)) dsu.unite(g.edge(e).u, g.edge(e).v);
    }
    int largest = 1;
    for (int v = 0; v < n; ++v) {
      if (dsu.find(v) == v) largest = std::max(largest, dsu.size[static_cast<std::size_t>(v)]);
    }
    expected += weight[static_cast<std::size_t>(__builtin_popcountll(mask))] * largest;
  }
  return expected;
}

// Expected total connectivity benefit of the n-vertex star (hub plus n-1
// leaves, each leaf tied to the hub), in closed form:
//
//   seed = leaf (prob (n-1)/n):
//     leaf's edge missing (1-p): the other n-1 vertices stay connected -> (n-1)^2
//     leaf's edge kept (p): hub dies too; each of the other n-2 leaves
//     survives alone iff its own edge is missing -> (n-2)(1-p)
//   seed = hub (prob 1/n): every leaf survives alone iff its edge is
//     missing -> (n-1)(1-p)
inline double closed_form_star_benefit(int n, double p) {
  if (n < 3) throw validation_error("star: n must be >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  const double nd = n;
  const double leaf_seed = (1.0 - p) * (nd - 1) * (nd - 1) + p * (nd - 2) * (1.0 - p);
  const double hub_seed = (nd - 1) * (1.0 - p);
  return (nd - 1) / nd * leaf_seed + hub_seed / nd;
}

}  // namespace netgame
