#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/graph.hpp"

namespace netgame {

struct MinCut {
  int weight = 0;
  std::vector<int> side;  // the side containing vertex 0, sorted
};

// Exact global minimum edge cut (Stoer-Wagner, maximum adjacency ordering).
// Fully deterministic: ties in the ordering resolve to the smallest index.
// A disconnected graph has weight 0 and one component as a side.
inline MinCut global_min_cut(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw validation_error("min cut: graph must have at least 2 vertices");

  {
    std::vector<int> sizes;
    std::vector<int> label = component_labels(g, &sizes);
    if (sizes.size() > 1) {
      MinCut out;
      out.weight = 0;
      for (int v = 0; v < n; ++v) {
        if (label[static_cast<std::size_t>(v)] == label[0]) out.side.push_back(v);
      }
      return out;
    }
  }

  std::vector<std::vector<int>> w(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += 1;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += 1;
  }
  std::vector<std::vector<int>> group(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) group[static_cast<std::size_t>(v)] = {v};
  std::vector<char> merged(static_cast<std::size_t>(n), 0);

  int best = std::numeric_limits<int>::max();
  std::vector<int> best_side;

  for (int phase = n; phase > 1; --phase) {
    std::vector<int> key(static_cast<std::size_t>(n), 0);
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    int prev = -1, last = -1;
    for (int step = 0; step < phase; ++step) {
      int sel = -1;
      for (int v = 0; v < n; ++v) {
        if (merged[static_cast<std::size_t>(v)] || in_a[static_cast<std::size_t>(v)]) continue;
        if (sel < 0 || key[static_cast<std::size_t>(v)] > key[static_cast<std::size_t>(sel)]) {
          sel = v;
        }
      }
      in_a[static_cast<std::size_t>(sel)] = 1;
      prev = last;
      last = sel;
      for (int v = 0; v < n; ++v) {
        if (merged[static_cast<std::size_t>(v)] || in_a[static_cast<std::size_t>(v)]) continue;
        key[static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(sel)][static_cast<std::size_t>(v)];
      }
    }
    // Cut of the phase: group(last) vs the rest.
    if (key[static_cast<std::size_t>(last)] < best) {
      best = key[static_cast<std::size_t>(last)];
      best_side = group[static_cast<std::size_t>(last)];
    }
    // Merge last into prev.
    merged[static_cast<std::size_t>(last)] = 1;
    auto& gp = group[static_cast<std::size_t>(prev)];
    auto& gl = group[static_cast<std::size_t>(last)];
    gp.insert(gp.end(), gl.begin(), gl.end());
    gl.clear();
    for (int v = 0; v < n; ++v) {
      if (v == prev) continue;
      w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)] +=
          w[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)];
      w[static_cast<std::size_t>(v)][static_cast<std::size_t>(prev)] =
          w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)];
    }
  }

  MinCut out;
  out.weight = best;
  std::sort(best_side.begin(), best_side.end());
  if (std::find(best_side.begin(), best_side.end(), 0) != best_side.end()) {
    out.side = std::move(best_side);
  } else {
    std::vector<char> in_side(static_cast<std::size_t>(n), 0);
    for (int v : best_side) in_side[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) {
      if (!in_side[static_cast<std::size_t>(v)]) out.side.push_back(v);
    }
  }
  return out;
}

struct CutNode {
  std::vector<int> vertices;  // original vertex ids, sorted
  int cut_size = -1;          // split cut for internal nodes, -1 for leaves
  int alpha = -1;             // verified min cut for non-singleton leaves
  int left = -1;
  int right = -1;

  bool is_leaf() const { return left < 0; }
  bool is_singleton() const { return vertices.size() == 1; }
};

// Recursive min-cut decomposition: a subgraph whose min cut reaches the
// threshold becomes a leaf, otherwise it splits along its minimum cut and
// both sides recurse. Since every split removes fewer than t edges and there
// are at most n-1 splits, a graph with at least t*n edges must end with a
// non-singleton leaf.
struct CutDecomposition {
  double threshold = 0.0;
  std::vector<CutNode> nodes;
  int root = -1;
  long long removed_edge_total = 0;
  int internal_count = 0;
  std::vector<int> strong_leaves;  // node ids of non-singleton leaves (alpha >= t)

  const CutNode* first_strong_leaf() const {
    return strong_leaves.empty() ? nullptr : &nodes[static_cast<std::size_t>(strong_leaves.front())];
  }
};

inline CutDecomposition min_cut_decompose(const Graph& g, double threshold) {
  if (!(threshold > 0.0)) throw validation_error("decompose: threshold must be > 0");
  CutDecomposition out;
  out.threshold = threshold;

  // Explicit stack of (vertex set, parent slot) to avoid deep recursion.
  struct Item {
    std::vector<int> vertices;
    int parent;
    bool is_left;
  };
  std::vector<Item> work;
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  work.push_back(Item{std::move(all), -1, false});

  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();

    const int id = static_cast<int>(out.nodes.size());
    CutNode node;
    node.vertices = item.vertices;
    std::sort(node.vertices.begin(), node.vertices.end());

    if (item.parent < 0) {
      out.root = id;
    } else if (item.is_left) {
      out.nodes[static_cast<std::size_t>(item.parent)].left = id;
    } else {
      out.nodes[static_cast<std::size_t>(item.parent)].right = id;
    }

    if (node.vertices.size() == 1) {
      out.nodes.push_back(std::move(node));
      continue;
    }

    const Graph sub = g.induced(node.vertices);
    const MinCut mc = global_min_cut(sub);
    if (static_cast<double>(mc.weight) >= threshold) {
      node.alpha = mc.weight;
      out.strong_leaves.push_back(id);
      out.nodes.push_back(std::move(node));
      continue;
    }

    node.cut_size = mc.weight;
    out.removed_edge_total += mc.weight;
    out.internal_count += 1;

    std::vector<char> in_side(node.vertices.size(), 0);
    for (int local : mc.side) in_side[static_cast<std::size_t>(local)] = 1;
    std::vector<int> left, right;
    for (std::size_t i = 0; i < node.vertices.size(); ++i) {
      (in_side[i] ? left : right).push_back(node.vertices[i]);
    }
    out.nodes.push_back(std::move(node));
    // Push right first so the left child is processed (and numbered) first.
    work.push_back(Item{std::move(right), id, false});
    work.push_back(Item{std::move(left), id, true});
  }
  return out;
}

}  // namespace netgame
