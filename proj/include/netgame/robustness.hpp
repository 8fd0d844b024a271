#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/graph.hpp"

namespace netgame {

// How entrenched an edge is: the minimum number of other vertices whose
// removal leaves the direct edge as the only u-v path. By Menger's theorem
// this equals the maximum number of internally vertex-disjoint u-v paths
// avoiding the direct edge, computed as a unit-vertex-capacity max flow.
struct RobustnessCertificate {
  int u = 0;
  int v = 0;
  int robustness = 0;
  std::vector<int> witness_cut;  // deleting these leaves the direct edge as the only path
};

namespace detail {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNet(int nodes) : arcs(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int cap) {
    arcs[static_cast<std::size_t>(from)].push_back(
        Arc{to, cap, static_cast<int>(arcs[static_cast<std::size_t>(to)].size())});
    arcs[static_cast<std::size_t>(to)].push_back(
        Arc{from, 0, static_cast<int>(arcs[static_cast<std::size_t>(from)].size()) - 1});
  }

  // Edmonds-Karp; flows here are at most n so this stays cheap.
  int max_flow(int s, int t) {
    int flow = 0;
    const int nodes = static_cast<int>(arcs.size());
    std::vector<int> prev_node(static_cast<std::size_t>(nodes));
    std::vector<int> prev_arc(static_cast<std::size_t>(nodes));
    while (true) {
      std::fill(prev_node.begin(), prev_node.end(), -1);
      prev_node[static_cast<std::size_t>(s)] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && prev_node[static_cast<std::size_t>(t)] < 0) {
        int u = q.front();
        q.pop();
        for (std::size_t i = 0; i < arcs[static_cast<std::size_t>(u)].size(); ++i) {
          const Arc& a = arcs[static_cast<std::size_t>(u)][i];
          if (a.cap > 0 && prev_node[static_cast<std::size_t>(a.to)] < 0) {
            prev_node[static_cast<std::size_t>(a.to)] = u;
            prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
            q.push(a.to);
          }
        }
      }
      if (prev_node[static_cast<std::size_t>(t)] < 0) break;
      for (int v = t; v != s; v = prev_node[static_cast<std::size_t>(v)]) {
        int u = prev_node[static_cast<std::size_t>(v)];
        Arc& a = arcs[static_cast<std::size_t>(u)][static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
        a.cap -= 1;
        arcs[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(arcs.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs[static_cast<std::size_t>(u)]) {
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }
};

}  // namespace detail

inline RobustnessCertificate edge_robustness(const Graph& g, int u, int v) {
  const int direct = g.find_edge(u, v);
  if (direct < 0) {
    throw validation_error("robustness: edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} is not in the graph");
  }
  const int n = g.vertex_count();

  // Split every vertex except u, v into in/out halves of capacity 1; graph
  // edges (other than the direct one) get capacity n, which no minimum cut
  // can afford to use.
  auto node_in = [](int x) { return 2 * x; };
  auto node_out = [](int x) { return 2 * x + 1; };
  detail::FlowNet net(2 * n);
  const int big = n;
  for (int x = 0; x < n; ++x) {
    net.add(node_in(x), node_out(x), (x == u || x == v) ? big : 1);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == direct) continue;
    const Edge& ed = g.edge(e);
    net.add(node_out(ed.u), node_in(ed.v), big);
    net.add(node_out(ed.v), node_in(ed.u), big);
  }

  RobustnessCertificate cert;
  cert.u = std::min(u, v);
  cert.v = std::max(u, v);
  cert.robustness = net.max_flow(node_out(u), node_in(v));

  const std::vector<char> reach = net.residual_reachable(node_out(u));
  for (int x = 0; x < n; ++x) {
    if (x == u || x == v) continue;
    if (reach[static_cast<std::size_t>(node_in(x))] && !reach[static_cast<std::size_t>(node_out(x))]) {
      cert.witness_cut.push_back(x);
    }
  }
  return cert;
}

// First edge (in edge-index order) whose robustness is at least gamma + 1.
inline std::optional<RobustnessCertificate> robust_edge_exists(const Graph& g, int gamma) {
  if (gamma < 0) throw validation_error("gamma: must be >= 0");
  for (const Edge& e : g.edges()) {
    RobustnessCertificate cert = edge_robustness(g, e.u, e.v);
    if (cert.robustness >= gamma + 1) return cert;
  }
  return std::nullopt;
}

}  // namespace netgame
