#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/exact.hpp"
#include "netgame/graph.hpp"
#include "netgame/monte_carlo.hpp"
#include "netgame/parallel.hpp"
#include "netgame/percolation.hpp"
#include "netgame/rng.hpp"

namespace netgame {

struct ProbabilityEstimate {
  double mean = 0.0;
  double half_width = 0.0;
  std::uint64_t samples = 0;
  double confidence = 0.0;

  double lower() const { return mean - half_width; }
  double upper() const { return mean + half_width; }
};

struct SamplingOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double confidence = 0.99;
  int threads = 0;
  std::uint64_t block_size = 8192;
};

namespace detail {

inline ProbabilityEstimate make_probability_estimate(std::uint64_t hits,
                                                     const SamplingOptions& opt) {
  ProbabilityEstimate est;
  est.mean = static_cast<double>(hits) / static_cast<double>(opt.samples);
  est.half_width = hoeffding_half_width(1.0, opt.confidence, opt.samples);
  est.samples = opt.samples;
  est.confidence = opt.confidence;
  return est;
}

}  // namespace detail

// Worst-case (over seeds in H) probability that an attack reaching a vertex
// of H sweeps all of H: for each seed s in H the estimated chance that H is
// contained in s's retained-graph component. Per-edge uniforms are derived
// from (seed, sample, edge), so estimates at different p values are coupled
// and monotone in p sample by sample.
struct InfectionCertainty {
  std::vector<ProbabilityEstimate> per_seed;  // ordered as the sorted H
  std::vector<int> subgraph;                  // sorted H
  int min_index = 0;                          // index into per_seed / subgraph

  const ProbabilityEstimate& min_estimate() const {
    return per_seed[static_cast<std::size_t>(min_index)];
  }
};

inline InfectionCertainty infection_certainty(const Graph& g, std::vector<int> subgraph, double p,
                                              const SamplingOptions& opt = {}) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  if (opt.samples < 1) throw validation_error("samples: must be >= 1");
  std::sort(subgraph.begin(), subgraph.end());
  subgraph.erase(std::unique(subgraph.begin(), subgraph.end()), subgraph.end());
  if (subgraph.size() < 2) throw validation_error("subgraph: need at least 2 vertices");
  for (int v : subgraph) {
    if (v < 0 || v >= g.vertex_count()) {
      throw validation_error("subgraph: vertex " + std::to_string(v) + " not in the graph");
    }
  }

  const int n = g.vertex_count();
  std::vector<char> in_h(static_cast<std::size_t>(n), 0);
  for (int v : subgraph) in_h[static_cast<std::size_t>(v)] = 1;
  const int h_size = static_cast<int>(subgraph.size());

  InfectionCertainty out;
  out.subgraph = subgraph;
  for (std::size_t si = 0; si < subgraph.size(); ++si) {
    const int start = subgraph[si];
    const std::uint64_t stream_tag = derive_seed(opt.seed, 0x48534545u + si);
    auto body = [&](std::uint64_t& hits, std::uint64_t begin, std::uint64_t end) {
      std::vector<char> dead(static_cast<std::size_t>(n));
      std::vector<int> stack;
      for (std::uint64_t it = begin; it < end; ++it) {
        std::fill(dead.begin(), dead.end(), 0);
        stack.clear();
        stack.push_back(start);
        dead[static_cast<std::size_t>(start)] = 1;
        int covered = 1;
        while (!stack.empty() && covered < h_size) {
          int u = stack.back();
          stack.pop_back();
          for (const auto& [w, e] : g.adjacency(u)) {
            if (dead[static_cast<std::size_t>(w)]) continue;
            if (indexed_uniform(stream_tag, it, static_cast<std::uint64_t>(e)) < p) {
              dead[static_cast<std::size_t>(w)] = 1;
              if (in_h[static_cast<std::size_t>(w)]) ++covered;
              stack.push_back(w);
            }
          }
        }
        if (covered == h_size) ++hits;
      }
    };
    std::uint64_t hits = blocked_reduce(
        opt.samples, opt.block_size, opt.threads, std::uint64_t{0}, body,
        [](std::uint64_t& a, const std::uint64_t& b) { a += b; });
    out.per_seed.push_back(detail::make_probability_estimate(hits, opt));
    if (out.per_seed.back().mean < out.per_seed[static_cast<std::size_t>(out.min_index)].mean) {
      out.min_index = static_cast<int>(si);
    }
  }
  return out;
}

// Empirical distribution of the retained-graph component size of a uniformly
// random vertex. The component is grown lazily, so each sample only touches
// edges incident to it. Optional degree statistics (mean number of vertices
// with at least d retained edges) require a full percolation draw per sample
// and are off by default.
struct ComponentSizeTail {
  std::vector<std::uint64_t> size_counts;  // index s = number of samples with size exactly s
  std::uint64_t samples = 0;
  double confidence = 0.0;
  int max_observed = 0;
  std::vector<double> mean_vertices_with_kept_degree_at_least;  // index d; empty unless requested

  double tail_probability(int s) const {
    std::uint64_t hits = 0;
    for (std::size_t k = static_cast<std::size_t>(std::max(s, 0)); k < size_counts.size(); ++k) {
      hits += size_counts[k];
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
  }

  double tail_half_width() const {
    return hoeffding_half_width(1.0, confidence, samples);
  }
};

struct TailOptions : SamplingOptions {
  bool degree_tail = false;
};

inline ComponentSizeTail component_size_tail(const Graph& g, double p,
                                             const TailOptions& opt = {}) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  if (opt.samples < 1) throw validation_error("samples: must be >= 1");
  const int n = g.vertex_count();
  if (n < 1) throw validation_error("graph: must have at least one vertex");

  int max_degree = 0;
  for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));

  struct Acc {
    std::vector<std::uint64_t> size_counts;
    std::vector<std::uint64_t> degree_counts;  // vertices with kept degree >= d, summed
  };
  Acc zero;
  zero.size_counts.assign(static_cast<std::size_t>(n) + 1, 0);
  if (opt.degree_tail) zero.degree_counts.assign(static_cast<std::size_t>(max_degree) + 1, 0);

  auto body = [&](Acc& acc, std::uint64_t begin, std::uint64_t end) {
    std::vector<char> dead(static_cast<std::size_t>(n));
    std::vector<int> stack;
    std::vector<int> kept_degree(static_cast<std::size_t>(n));
    for (std::uint64_t it = begin; it < end; ++it) {
      SplitMix64 rng = sample_stream(opt.seed, it);
      const int start = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));
      std::fill(dead.begin(), dead.end(), 0);
      stack.clear();
      stack.push_back(start);
      dead[static_cast<std::size_t>(start)] = 1;
      int size = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : g.adjacency(u)) {
          (void)e;
          if (dead[static_cast<std::size_t>(w)]) continue;
          if (rng.uniform01() < p) {
            dead[static_cast<std::size_t>(w)] = 1;
            ++size;
            stack.push_back(w);
          }
        }
      }
      acc.size_counts[static_cast<std::size_t>(size)] += 1;

      if (opt.degree_tail) {
        // Independent full draw for the degree statistic.
        SplitMix64 deg_rng(derive_seed(opt.seed, it, 0x44454752u));
        std::fill(kept_degree.begin(), kept_degree.end(), 0);
        for (const Edge& ed : g.edges()) {
          if (deg_rng.uniform01() < p) {
            kept_degree[static_cast<std::size_t>(ed.u)] += 1;
            kept_degree[static_cast<std::size_t>(ed.v)] += 1;
          }
        }
        for (int v = 0; v < n; ++v) {
          for (int d = 0; d <= kept_degree[static_cast<std::size_t>(v)]; ++d) {
            acc.degree_counts[static_cast<std::size_t>(d)] += 1;
          }
        }
      }
    }
  };
  auto merge = [&](Acc& a, const Acc& b) {
    for (std::size_t i = 0; i < a.size_counts.size(); ++i) a.size_counts[i] += b.size_counts[i];
    for (std::size_t i = 0; i < a.degree_counts.size(); ++i) a.degree_counts[i] += b.degree_counts[i];
  };
  Acc acc = blocked_reduce(opt.samples, opt.block_size, opt.threads, zero, body, merge);

  ComponentSizeTail out;
  out.size_counts = std::move(acc.size_counts);
  out.samples = opt.samples;
  out.confidence = opt.confidence;
  for (std::size_t s = 0; s < out.size_counts.size(); ++s) {
    if (out.size_counts[s] > 0) out.max_observed = static_cast<int>(s);
  }
  if (opt.degree_tail) {
    out.mean_vertices_with_kept_degree_at_least.resize(acc.degree_counts.size());
    for (std::size_t d = 0; d < acc.degree_counts.size(); ++d) {
      out.mean_vertices_with_kept_degree_at_least[d] =
          static_cast<double>(acc.degree_counts[d]) / static_cast<double>(opt.samples);
    }
  }
  return out;
}

// Monte Carlo estimate of Pr[G[p] is connected]. Requires a connected input.
inline ProbabilityEstimate connectivity_probability(const Graph& g, double p,
                                                    const SamplingOptions& opt = {}) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  if (opt.samples < 1) throw validation_error("samples: must be >= 1");
  if (!is_connected(g)) throw validation_error("graph: connectivity probe expects a connected graph");
  const int n = g.vertex_count();

  auto body = [&](std::uint64_t& hits, std::uint64_t begin, std::uint64_t end) {
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::vector<char> kept(static_cast<std::size_t>(g.edge_count()));
    std::vector<int> stack;
    for (std::uint64_t it = begin; it < end; ++it) {
      SplitMix64 rng = sample_stream(opt.seed, it);
      for (auto& k : kept) k = rng.uniform01() < p ? 1 : 0;
      std::fill(seen.begin(), seen.end(), 0);
      stack.clear();
      stack.push_back(0);
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : g.adjacency(u)) {
          if (!kept[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
      if (reached == n) ++hits;
    }
  };
  std::uint64_t hits = blocked_reduce(
      opt.samples, opt.block_size, opt.threads, std::uint64_t{0}, body,
      [](std::uint64_t& a, const std::uint64_t& b) { a += b; });
  return detail::make_probability_estimate(hits, opt);
}

// Lower bound on the expected sum of connectivity benefits of a component of
// size n_C inside an n-vertex network when the expected largest retained
// component of C[p] is at most n_C(1 - eps):
//   (n - n_C) n_C^2 / n  +  eps n_C^3 / (3 n).
inline double welfare_lower_bound(int n, int n_component, double eps) {
  if (n_component < 1 || n_component > n) {
    throw validation_error("welfare bound: requires 1 <= n_C <= n");
  }
  if (!(eps >= 0.0 && eps <= 1.0)) throw validation_error("welfare bound: eps must lie in [0, 1]");
  const double nc = n_component;
  return (n - nc) * nc * nc / n + eps * nc * nc * nc / (3.0 * n);
}

// Exact verification companion for welfare_lower_bound on enumeration-sized
// components: derives eps from the exactly computed E[largest component of
// C[p]] and compares the bound against the exact benefit sum of C's
// vertices. `component` is the component's own graph; `total_n` the size of
// the ambient network (attacks outside C leave C intact).
struct WelfareBoundCheck {
  int component_size = 0;
  int total_n = 0;
  double p = 0.0;
  double expected_largest = 0.0;
  double epsilon = 0.0;
  double bound = 0.0;
  double exact_benefit_sum = 0.0;
  bool holds = false;
};

inline WelfareBoundCheck check_component_welfare_bound(const Graph& component, int total_n,
                                                       double p, int edge_cap = 20) {
  const int nc = component.vertex_count();
  if (nc < 1) throw validation_error("welfare bound: component must be nonempty");
  if (total_n < nc) throw validation_error("welfare bound: total_n must be >= component size");
  if (!is_connected(component)) {
    throw validation_error("welfare bound: component graph must be connected");
  }

  WelfareBoundCheck out;
  out.component_size = nc;
  out.total_n = total_n;
  out.p = p;
  out.expected_largest = expected_largest_component(component, p, edge_cap);
  out.epsilon = 1.0 - out.expected_largest / nc;
  out.bound = welfare_lower_bound(total_n, nc, out.epsilon);

  // Benefit sum of C's vertices: attacks outside C (total_n - nc seeds)
  // leave C whole and score n_C each; attacks inside C are enumerated.
  const std::vector<double> inner = detail::exact_benefits(component, p, edge_cap);
  double inner_sum = 0.0;
  for (double b : inner) inner_sum += b;  // each is (1/n_C) sum over seeds in C
  out.exact_benefit_sum = static_cast<double>(total_n - nc) * nc * nc / total_n +
                          inner_sum * nc / total_n;
  out.holds = out.exact_benefit_sum >= out.bound - 1e-9;
  return out;
}

// Expected number of isolated vertices of G[p], exactly sum (1-p)^deg(i),
// and its arithmetic-geometric-mean lower bound n (1-p)^(2|E|/n). Equality
// holds exactly on regular graphs.
struct IsolatedVertexBound {
  double exact_expected_isolated = 0.0;
  double amgm_lower_bound = 0.0;
};

inline IsolatedVertexBound isolated_vertex_bound(const Graph& g, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  const int n = g.vertex_count();
  if (n < 1) throw validation_error("graph: must have at least one vertex");
  IsolatedVertexBound out;
  for (int v = 0; v < n; ++v) {
    out.exact_expected_isolated += std::pow(1.0 - p, g.degree(v));
  }
  out.amgm_lower_bound =
      n * std::pow(1.0 - p, 2.0 * g.edge_count() / static_cast<double>(n));
  return out;
}

// Descriptive density ratios against the n log(n)/p and n/p reference
// curves. No pass/fail: the reference constants are asymptotic.
struct DensityReport {
  int n = 0;
  int edge_count = 0;
  double p = 0.0;
  double ratio_nlogn = 0.0;  // |E| p / (n log n)
  double ratio_n = 0.0;      // |E| p / n
};

inline DensityReport density_report(const Graph& g, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw validation_error("p: must lie in [0, 1]");
  DensityReport out;
  out.n = g.vertex_count();
  out.edge_count = g.edge_count();
  out.p = p;
  const double n = out.n;
  out.ratio_n = out.n > 0 ? out.edge_count * p / n : 0.0;
  out.ratio_nlogn = out.n > 1 ? out.edge_count * p / (n * std::log(n)) : 0.0;
  return out;
}

}  // namespace netgame
