#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/parallel.hpp"
#include "netgame/rng.hpp"

namespace netgame {

// Distribution-free Hoeffding half-interval for a mean of i.i.d. samples
// confined to an interval of width `range`.
inline double hoeffding_half_width(double range, double confidence, std::uint64_t samples) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw validation_error("confidence: must lie in (0, 1)");
  }
  if (samples < 1) throw validation_error("samples: must be >= 1");
  return range * std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

// Samples needed so the Hoeffding half-width of a per-player estimate
// (range n) is at most eps at confidence 1 - delta.
inline std::uint64_t samples_for_target(int n, double eps, double delta) {
  if (!(eps > 0.0)) throw validation_error("eps: must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw validation_error("delta: must lie in (0, 1)");
  double nd = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(nd * nd * std::log(2.0 / delta) / (2.0 * eps * eps)));
}

struct UtilityEstimate {
  double mean = 0.0;
  double half_width = 0.0;
  std::uint64_t samples = 0;
  double confidence = 0.0;
  std::uint64_t rng_seed = 0;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
};

struct McOptions {
  std::uint64_t samples = 0;  // explicit count; 0 means derive from (eps, delta)
  double eps = 0.0;
  double delta = 0.0;
  double confidence = 0.99;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  std::uint64_t block_size = 8192;
};

struct McUtilities {
  std::vector<UtilityEstimate> player;
  UtilityEstimate welfare;
};

namespace detail {

// Scratch for one worker; reused across samples to avoid allocation.
struct AttackScratch {
  std::vector<char> kept_edge;
  std::vector<int> kept_label;  // retained-graph component per vertex
  std::vector<int> kept_size;   // by retained component id
  std::vector<std::uint32_t> alive_mark;
  std::vector<int> label;  // survivor component per vertex, valid per epoch
  std::vector<int> comp_size;
  std::vector<int> stack;
  std::uint32_t epoch = 0;

  void prepare(int n, int m) {
    if (static_cast<int>(alive_mark.size()) != n) {
      alive_mark.assign(static_cast<std::size_t>(n), 0);
      label.assign(static_cast<std::size_t>(n), 0);
      kept_label.assign(static_cast<std::size_t>(n), -1);
      epoch = 0;
    }
    kept_edge.resize(static_cast<std::size_t>(m));
    std::fill(kept_label.begin(), kept_label.end(), -1);
    kept_size.clear();
    stack.clear();
  }

  void next_epoch() {
    if (++epoch == 0) {  // stamp wrap-around
      std::fill(alive_mark.begin(), alive_mark.end(), 0);
      epoch = 1;
    }
  }
};

// One estimator sample: a single retained-edge draw, with the uniform attack
// seed averaged out exactly. Every retained component is the dead set for
// |D| of the n seeds, so it contributes with weight |D|/n; survivors are
// scored by their component size in the original graph minus the dead set.
// Adds each player's seed-averaged benefit (a value in [0, n)) to benefit[]
// and returns the sample's total over players.
inline double add_attack_sample(const Graph& g, double p, SplitMix64& rng,
                                AttackScratch& s, double* benefit) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  s.prepare(n, m);
  for (int e = 0; e < m; ++e) {
    s.kept_edge[static_cast<std::size_t>(e)] = rng.uniform01() < p ? 1 : 0;
  }

  // Retained-graph components.
  for (int v = 0; v < n; ++v) {
    if (s.kept_label[static_cast<std::size_t>(v)] >= 0) continue;
    const int id = static_cast<int>(s.kept_size.size());
    int count = 0;
    s.kept_label[static_cast<std::size_t>(v)] = id;
    s.stack.push_back(v);
    while (!s.stack.empty()) {
      int u = s.stack.back();
      s.stack.pop_back();
      ++count;
      for (const auto& [w, e] : g.adjacency(u)) {
        if (!s.kept_edge[static_cast<std::size_t>(e)]) continue;
        if (s.kept_label[static_cast<std::size_t>(w)] >= 0) continue;
        s.kept_label[static_cast<std::size_t>(w)] = id;
        s.stack.push_back(w);
      }
    }
    s.kept_size.push_back(count);
  }

  double total = 0.0;
  for (int dead = 0; dead < static_cast<int>(s.kept_size.size()); ++dead) {
    const int dead_size = s.kept_size[static_cast<std::size_t>(dead)];
    if (dead_size == n) continue;
    const double weight = static_cast<double>(dead_size) / n;
    s.next_epoch();
    s.comp_size.clear();
    double sq = 0.0;
    for (int v = 0; v < n; ++v) {
      if (s.kept_label[static_cast<std::size_t>(v)] == dead) continue;
      if (s.alive_mark[static_cast<std::size_t>(v)] == s.epoch) continue;
      const int id = static_cast<int>(s.comp_size.size());
      int count = 0;
      s.alive_mark[static_cast<std::size_t>(v)] = s.epoch;
      s.label[static_cast<std::size_t>(v)] = id;
      s.stack.push_back(v);
      while (!s.stack.empty()) {
        int u = s.stack.back();
        s.stack.pop_back();
        ++count;
        for (const auto& [w, e] : g.adjacency(u)) {
          (void)e;
          if (s.kept_label[static_cast<std::size_t>(w)] == dead) continue;
          if (s.alive_mark[static_cast<std::size_t>(w)] == s.epoch) continue;
          s.alive_mark[static_cast<std::size_t>(w)] = s.epoch;
          s.label[static_cast<std::size_t>(w)] = id;
          s.stack.push_back(w);
        }
      }
      s.comp_size.push_back(count);
      sq += static_cast<double>(count) * count;
    }
    for (int i = 0; i < n; ++i) {
      if (s.kept_label[static_cast<std::size_t>(i)] == dead) continue;
      benefit[i] += weight * s.comp_size[static_cast<std::size_t>(s.label[static_cast<std::size_t>(i)])];
    }
    total += weight * sq;
  }
  return total;
}

struct BenefitAccumulator {
  std::vector<double> benefit;
  double welfare = 0.0;
};

}  // namespace detail

// Seeded Monte Carlo utility estimates. Each sample draws one retained-edge
// set shared by all players (common random numbers) and integrates the
// uniform attack seed exactly, so the welfare estimate is the per-sample sum
// of player benefits and a graph with no edges estimates (n-1)/n with zero
// variance. Per-sample RNG streams are derived from (seed, sample index);
// together with the fixed block-merge order this makes results bit-identical
// for any thread count.
inline McUtilities monte_carlo_utilities(const StrategyProfile& sp, const GameParams& gp,
                                         const McOptions& opt = {}) {
  sp.validate();
  gp.validate();
  const Graph g = induced_graph(sp);
  const int n = sp.n;

  std::uint64_t samples = opt.samples;
  double confidence = opt.confidence;
  if (samples == 0) {
    if (opt.eps <= 0.0 || opt.delta <= 0.0) {
      throw validation_error("samples: sample count (or eps/delta target) required");
    }
    samples = samples_for_target(n, opt.eps, opt.delta);
    confidence = 1.0 - opt.delta;
  }
  if (samples < 1) throw validation_error("samples: must be >= 1");

  detail::BenefitAccumulator zero;
  zero.benefit.assign(static_cast<std::size_t>(n), 0.0);

  auto body = [&](detail::BenefitAccumulator& acc, std::uint64_t begin, std::uint64_t end) {
    detail::AttackScratch scratch;
    for (std::uint64_t i = begin; i < end; ++i) {
      SplitMix64 rng = sample_stream(opt.seed, i);
      acc.welfare += detail::add_attack_sample(g, gp.spread_prob, rng, scratch, acc.benefit.data());
    }
  };
  auto merge = [&](detail::BenefitAccumulator& into, const detail::BenefitAccumulator& part) {
    for (int i = 0; i < n; ++i) into.benefit[static_cast<std::size_t>(i)] += part.benefit[static_cast<std::size_t>(i)];
    into.welfare += part.welfare;
  };
  detail::BenefitAccumulator acc =
      blocked_reduce(samples, opt.block_size, opt.threads, zero, body, merge);

  McUtilities out;
  out.player.resize(static_cast<std::size_t>(n));
  const double hw = hoeffding_half_width(static_cast<double>(n), confidence, samples);
  double total_cost = 0.0;
  for (int i = 0; i < n; ++i) {
    auto& est = out.player[static_cast<std::size_t>(i)];
    const double cost = sp.purchase_count(i) * gp.edge_cost;
    total_cost += cost;
    est.mean = acc.benefit[static_cast<std::size_t>(i)] / static_cast<double>(samples) - cost;
    est.half_width = hw;
    est.samples = samples;
    est.confidence = confidence;
    est.rng_seed = opt.seed;
  }
  out.welfare.mean = acc.welfare / static_cast<double>(samples) - total_cost;
  out.welfare.half_width =
      hoeffding_half_width(static_cast<double>(n) * n, confidence, samples);
  out.welfare.samples = samples;
  out.welfare.confidence = confidence;
  out.welfare.rng_seed = opt.seed;
  return out;
}

}  // namespace netgame
