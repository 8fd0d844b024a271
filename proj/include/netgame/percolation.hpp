#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/rng.hpp"

namespace netgame {

struct PercolationSample {
  std::vector<char> kept;     // per edge index
  std::vector<int> component; // per vertex, component label of (V, kept edges)
  int component_count = 0;
};

namespace detail {

inline void label_kept_components(const Graph& g, const std::vector<char>& kept,
                                  PercolationSample& out) {
  const int n = g.vertex_count();
  out.component.assign(static_cast<std::size_t>(n), -1);
  out.component_count = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (out.component[static_cast<std::size_t>(s)] >= 0) continue;
    int id = out.component_count++;
    out.component[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : g.adjacency(u)) {
        if (!kept[static_cast<std::size_t>(e)]) continue;
        if (out.component[static_cast<std::size_t>(w)] < 0) {
          out.component[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
}

}  // namespace detail

// Draws G[p]: each edge kept independently with probability p.
inline PercolationSample sample_percolation(const Graph& g, double p, SplitMix64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  PercolationSample out;
  out.kept.resize(static_cast<std::size_t>(g.edge_count()));
  for (auto& k : out.kept) k = rng.uniform01() < p ? 1 : 0;
  detail::label_kept_components(g, out.kept, out);
  return out;
}

// Same draw expressed through explicit per-edge uniforms; keeping edge e iff
// u[e] < p makes samples at different p values nested (coupled).
inline PercolationSample percolation_from_uniforms(const Graph& g,
                                                   std::span<const double> uniforms,
                                                   double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  if (static_cast<int>(uniforms.size()) != g.edge_count()) {
    throw validation_error("percolation: expected one uniform per edge");
  }
  PercolationSample out;
  out.kept.resize(uniforms.size());
  for (std::size_t e = 0; e < uniforms.size(); ++e) out.kept[e] = uniforms[e] < p ? 1 : 0;
  detail::label_kept_components(g, out.kept, out);
  return out;
}

// Deterministic core of an attack: given the retained edge set and a seed,
// the seed's retained-graph component dies; survivors' connectivity is read
// from the original graph restricted to the living vertices.
inline AttackOutcome attack_outcome(const Graph& g, int seed, const std::vector<char>& kept) {
  const int n = g.vertex_count();
  if (seed < 0 || seed >= n) throw validation_error("attack: seed vertex out of range");
  if (static_cast<int>(kept.size()) != g.edge_count()) {
    throw validation_error("attack: kept-edge vector does not match edge count");
  }
  AttackOutcome out;
  out.seed_vertex = seed;
  std::vector<char> dead(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{seed};
  dead[static_cast<std::size_t>(seed)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.adjacency(u)) {
      if (!kept[static_cast<std::size_t>(e)] || dead[static_cast<std::size_t>(w)]) continue;
      dead[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (dead[static_cast<std::size_t>(v)]) out.dead.push_back(v);
  }
  std::vector<char> labeled(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (dead[static_cast<std::size_t>(s)] || labeled[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    labeled[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : g.adjacency(u)) {
        (void)e;
        if (dead[static_cast<std::size_t>(w)] || labeled[static_cast<std::size_t>(w)]) continue;
        labeled[static_cast<std::size_t>(w)] = 1;
        comp.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.survivor_components.push_back(std::move(comp));
  }
  return out;
}

// Attack with a uniformly random seed. Edge retention is decided lazily while
// the infection front expands; each edge is examined (and its uniform drawn)
// at most once, which yields the same distribution as a full percolation draw.
inline AttackOutcome simulate_attack(const Graph& g, double p, SplitMix64& rng) {
  const int n = g.vertex_count();
  if (n < 1) throw validation_error("attack: graph must have at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  int seed = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));

  AttackOutcome out;
  out.seed_vertex = seed;
  std::vector<char> dead(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{seed};
  dead[static_cast<std::size_t>(seed)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : g.adjacency(u)) {
      (void)e;
      if (dead[static_cast<std::size_t>(w)]) continue;
      if (rng.uniform01() < p) {
        dead[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (dead[static_cast<std::size_t>(v)]) out.dead.push_back(v);
  }
  std::vector<char> labeled(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (dead[static_cast<std::size_t>(s)] || labeled[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    labeled[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : g.adjacency(u)) {
        (void)e;
        if (dead[static_cast<std::size_t>(w)] || labeled[static_cast<std::size_t>(w)]) continue;
        labeled[static_cast<std::size_t>(w)] = 1;
        comp.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.survivor_components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace netgame
