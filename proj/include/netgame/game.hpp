#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/graph.hpp"

namespace netgame {

struct GameParams {
  double edge_cost = 1.0;    // c, paid once per directed purchase
  double spread_prob = 0.5;  // p; 0 and 1 are accepted as degenerate cases

  void validate() const {
    if (!(edge_cost > 0.0)) {
      throw validation_error("params.c: edge cost must be > 0");
    }
    if (!(spread_prob >= 0.0 && spread_prob <= 1.0)) {
      throw validation_error("params.p: spread probability must lie in [0, 1]");
    }
  }
};

// Per-player purchase sets. The game graph is the union of all purchases;
// if i and j both buy {i,j} a single edge results and both pay.
struct StrategyProfile {
  int n = 0;
  std::vector<std::vector<int>> purchases;

  static StrategyProfile empty(int n) {
    StrategyProfile sp;
    sp.n = n;
    sp.purchases.assign(static_cast<std::size_t>(std::max(n, 0)), {});
    sp.validate();
    return sp;
  }

  void validate() const {
    if (n < 1) throw validation_error("profile.n: player count must be >= 1");
    if (static_cast<int>(purchases.size()) != n) {
      throw validation_error("profile.purchases: expected " + std::to_string(n) +
                             " entries, got " + std::to_string(purchases.size()));
    }
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j : purchases[static_cast<std::size_t>(i)]) {
        if (j < 0 || j >= n) {
          throw validation_error("profile.purchases[" + std::to_string(i) +
                                 "]: endpoint " + std::to_string(j) + " out of range");
        }
        if (j == i) {
          throw validation_error("profile.purchases[" + std::to_string(i) +
                                 "]: self-purchase is not allowed");
        }
        if (seen[static_cast<std::size_t>(j)]) {
          throw validation_error("profile.purchases[" + std::to_string(i) +
                                 "]: duplicate endpoint " + std::to_string(j));
        }
        seen[static_cast<std::size_t>(j)] = 1;
      }
    }
  }

  void normalize() {
    for (auto& s : purchases) std::sort(s.begin(), s.end());
  }

  int purchase_count(int i) const {
    return static_cast<int>(purchases[static_cast<std::size_t>(i)].size());
  }

  int total_purchases() const {
    int total = 0;
    for (const auto& s : purchases) total += static_cast<int>(s.size());
    return total;
  }
};

inline Graph induced_graph(const StrategyProfile& sp) {
  sp.validate();
  Graph g(sp.n);
  for (int i = 0; i < sp.n; ++i) {
    for (int j : sp.purchases[static_cast<std::size_t>(i)]) {
      g.add_purchase(i, i, j);
    }
  }
  return g;
}

// One realized attack: the seed's percolation component dies, the rest of the
// graph is re-read for connectivity among survivors.
struct AttackOutcome {
  int seed_vertex = 0;
  std::vector<int> dead;                              // sorted
  std::vector<std::vector<int>> survivor_components;  // each sorted, ordered by smallest member
};

struct UtilityVector {
  std::vector<double> benefit;  // expected post-attack component size, seed-averaged
  std::vector<double> utility;  // benefit - |s_i| * c
  double total_benefit = 0.0;
  double total_cost = 0.0;
  double welfare = 0.0;
};

inline UtilityVector assemble_utilities(const StrategyProfile& sp, const GameParams& gp,
                                        std::vector<double> benefit) {
  UtilityVector out;
  out.benefit = std::move(benefit);
  out.utility.resize(out.benefit.size());
  for (int i = 0; i < sp.n; ++i) {
    double cost = sp.purchase_count(i) * gp.edge_cost;
    out.utility[static_cast<std::size_t>(i)] = out.benefit[static_cast<std::size_t>(i)] - cost;
    out.total_cost += cost;
  }
  out.total_benefit = std::accumulate(out.benefit.begin(), out.benefit.end(), 0.0);
  out.welfare = std::accumulate(out.utility.begin(), out.utility.end(), 0.0);
  return out;
}

}  // namespace netgame
