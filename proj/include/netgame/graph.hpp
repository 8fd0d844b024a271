#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "netgame/errors.hpp"

namespace netgame {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  std::vector<int> buyers;  // players who paid for this edge, sorted; may be empty
};

// Undirected simple graph with optional buyer attribution per edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) {
    if (n < 0) throw validation_error("graph: vertex count must be nonnegative");
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Neighbors of v as (other endpoint, edge index) pairs.
  const std::vector<std::pair<int, int>>& adjacency(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  // Adds {u, v} if absent; returns the edge index either way.
  int add_edge(int u, int v) {
    check_endpoint(u);
    check_endpoint(v);
    if (u == v) throw validation_error("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    int e = find_edge(u, v);
    if (e >= 0) return e;
    e = static_cast<int>(edges_.size());
    edges_.push_back(Edge{u, v, {}});
    adj_[static_cast<std::size_t>(u)].emplace_back(v, e);
    adj_[static_cast<std::size_t>(v)].emplace_back(u, e);
    return e;
  }

  // Adds the edge (merging with an existing one) and records who paid for it.
  int add_purchase(int buyer, int u, int v) {
    int e = add_edge(u, v);
    auto& buyers = edges_[static_cast<std::size_t>(e)].buyers;
    auto it = std::lower_bound(buyers.begin(), buyers.end(), buyer);
    if (it == buyers.end() || *it != buyer) buyers.insert(it, buyer);
    return e;
  }

  int find_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
    const auto& a = degree(u) <= degree(v) ? adj_[static_cast<std::size_t>(u)]
                                           : adj_[static_cast<std::size_t>(v)];
    int other = degree(u) <= degree(v) ? v : u;
    for (const auto& [w, e] : a) {
      if (w == other) return e;
    }
    return -1;
  }

  bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

  // Subgraph induced by `vertices` (relabeled 0..k-1 in the given order).
  // Buyer attribution is dropped; induced subgraphs are used for structural
  // analysis only.
  Graph induced(const std::vector<int>& vertices) const {
    Graph sub(static_cast<int>(vertices.size()));
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      int v = vertices[i];
      if (v < 0 || v >= n_) throw validation_error("induced: vertex id out of range");
      if (local[static_cast<std::size_t>(v)] >= 0) {
        throw validation_error("induced: duplicate vertex id");
      }
      local[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (const Edge& e : edges_) {
      int lu = local[static_cast<std::size_t>(e.u)];
      int lv = local[static_cast<std::size_t>(e.v)];
      if (lu >= 0 && lv >= 0) sub.add_edge(lu, lv);
    }
    return sub;
  }

 private:
  void check_endpoint(int v) const {
    if (v < 0 || v >= n_) {
      throw validation_error("graph: vertex id " + std::to_string(v) +
                             " out of range [0, " + std::to_string(n_) + ")");
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Connected-component labels (0-based, in order of smallest contained vertex).
// If `sizes` is non-null it receives the size of each component.
inline std::vector<int> component_labels(const Graph& g, std::vector<int>* sizes = nullptr) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  int next = 0;
  if (sizes) sizes->clear();
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    int count = 0;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++count;
      for (const auto& [w, e] : g.adjacency(u)) {
        (void)e;
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    if (sizes) sizes->push_back(count);
    ++next;
  }
  return label;
}

inline int component_count(const Graph& g) {
  std::vector<int> sizes;
  component_labels(g, &sizes);
  return static_cast<int>(sizes.size());
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || component_count(g) == 1;
}

}  // namespace netgame
