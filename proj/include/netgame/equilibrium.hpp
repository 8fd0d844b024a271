#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/exact.hpp"
#include "netgame/game.hpp"
#include "netgame/monte_carlo.hpp"
#include "netgame/parallel.hpp"
#include "netgame/rng.hpp"

namespace netgame {

enum class DeviationClass { DropOneEdge, AddOneEdge, SwapOneEdge, FullSubset };
enum class CheckMode { Exact, MonteCarlo };
enum class Verdict { BeneficialViolation, NoViolation, Inconclusive };

inline const char* to_string(DeviationClass c) {
  switch (c) {
    case DeviationClass::DropOneEdge: return "drop";
    case DeviationClass::AddOneEdge: return "add";
    case DeviationClass::SwapOneEdge: return "swap";
    case DeviationClass::FullSubset: return "full";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::BeneficialViolation: return "BeneficialViolation";
    case Verdict::NoViolation: return "NoViolation";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

inline DeviationClass deviation_class_from_name(const std::string& name) {
  if (name == "drop") return DeviationClass::DropOneEdge;
  if (name == "add") return DeviationClass::AddOneEdge;
  if (name == "swap") return DeviationClass::SwapOneEdge;
  if (name == "full") return DeviationClass::FullSubset;
  throw validation_error("class: unknown deviation class \"" + name +
                         "\" (expected drop|add|swap|full)");
}

struct Deviation {
  int player = 0;
  std::vector<int> purchases;  // the replacement purchase set, sorted
  std::string label;
};

struct DeviationReport {
  Deviation deviation;
  UtilityEstimate baseline;  // exact mode: half_width 0, samples 0
  UtilityEstimate deviated;
  Verdict verdict = Verdict::NoViolation;
  double margin = 0.0;  // deviated.mean - baseline.mean
};

struct EquilibriumOptions {
  // Improvement threshold: a deviation must beat the baseline by more than
  // epsilon to count as a violation. In MC mode the same epsilon also sets
  // the per-estimate accuracy target.
  double epsilon = 0.0;
  double delta = 0.01;  // MC: per-estimate failure probability
  std::uint64_t seed = 0;
  int threads = 0;
  int edge_cap = 20;       // exact-oracle enumeration cap
  int full_subset_cap = 8; // FullSubset requires n <= this
};

namespace detail {

inline std::string purchase_set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

}  // namespace detail

// All deviations of `player` in the class, in deterministic order.
inline std::vector<Deviation> enumerate_deviations(const StrategyProfile& sp, int player,
                                                   DeviationClass cls, int full_subset_cap = 8) {
  const auto& current = sp.purchases[static_cast<std::size_t>(player)];
  std::vector<int> sorted_current = current;
  std::sort(sorted_current.begin(), sorted_current.end());
  std::vector<char> owned(static_cast<std::size_t>(sp.n), 0);
  for (int j : current) owned[static_cast<std::size_t>(j)] = 1;

  std::vector<Deviation> out;
  auto push = [&](std::vector<int> purchases, std::string label) {
    std::sort(purchases.begin(), purchases.end());
    out.push_back(Deviation{player, std::move(purchases), std::move(label)});
  };

  switch (cls) {
    case DeviationClass::DropOneEdge: {
      for (int j : sorted_current) {
        std::vector<int> next;
        for (int k : sorted_current) {
          if (k != j) next.push_back(k);
        }
        push(std::move(next), "drop " + std::to_string(j));
      }
      break;
    }
    case DeviationClass::AddOneEdge: {
      for (int j = 0; j < sp.n; ++j) {
        if (j == player || owned[static_cast<std::size_t>(j)]) continue;
        std::vector<int> next = sorted_current;
        next.push_back(j);
        push(std::move(next), "add " + std::to_string(j));
      }
      break;
    }
    case DeviationClass::SwapOneEdge: {
      for (int j : sorted_current) {
        for (int k = 0; k < sp.n; ++k) {
          if (k == player || owned[static_cast<std::size_t>(k)]) continue;
          std::vector<int> next;
          for (int x : sorted_current) {
            if (x != j) next.push_back(x);
          }
          next.push_back(k);
          push(std::move(next), "swap " + std::to_string(j) + "->" + std::to_string(k));
        }
      }
      break;
    }
    case DeviationClass::FullSubset: {
      if (sp.n > full_subset_cap) {
        throw cap_exceeded("full-subset deviations are capped at n = " +
                           std::to_string(full_subset_cap) + " players (profile has " +
                           std::to_string(sp.n) + ")");
      }
      std::vector<int> others;
      for (int j = 0; j < sp.n; ++j) {
        if (j != player) others.push_back(j);
      }
      const std::uint32_t count = std::uint32_t{1} << others.size();
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::vector<int> next;
        for (std::size_t b = 0; b < others.size(); ++b) {
          if (mask & (std::uint32_t{1} << b)) next.push_back(others[b]);
        }
        if (next == sorted_current) continue;
        std::string label = "set " + detail::purchase_set_label(next);
        push(std::move(next), std::move(label));
      }
      break;
    }
  }
  return out;
}

struct DeviationDelta {
  Deviation deviation;
  double benefit_delta = 0.0;  // exact change in connectivity benefit
  int purchase_delta = 0;      // change in |s_i|
};

// Exact benefit change for every deviation of every player. Utility margins
// follow as benefit_delta - purchase_delta * c, which lets cost sweeps reuse
// one enumeration per value of p.
inline std::vector<DeviationDelta> deviation_benefit_deltas(const StrategyProfile& sp, double p,
                                                            DeviationClass cls,
                                                            const EquilibriumOptions& opt = {}) {
  sp.validate();
  const Graph g = induced_graph(sp);
  const std::vector<double> base = detail::exact_benefits(g, p, opt.edge_cap);

  std::vector<DeviationDelta> out;
  for (int i = 0; i < sp.n; ++i) {
    for (auto& dev : enumerate_deviations(sp, i, cls, opt.full_subset_cap)) {
      DeviationDelta d;
      d.purchase_delta = static_cast<int>(dev.purchases.size()) - sp.purchase_count(i);
      d.deviation = std::move(dev);
      out.push_back(std::move(d));
    }
  }

  struct Nothing {};
  blocked_reduce(
      out.size(), 1, opt.threads, Nothing{},
      [&](Nothing&, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t k = begin; k < end; ++k) {
          auto& d = out[static_cast<std::size_t>(k)];
          StrategyProfile devsp = sp;
          devsp.purchases[static_cast<std::size_t>(d.deviation.player)] = d.deviation.purchases;
          const Graph dg = induced_graph(devsp);
          const std::vector<double> devb = detail::exact_benefits(dg, p, opt.edge_cap);
          d.benefit_delta = devb[static_cast<std::size_t>(d.deviation.player)] -
                            base[static_cast<std::size_t>(d.deviation.player)];
        }
      },
      [](Nothing&, const Nothing&) {});
  return out;
}

// Checks every deviation in the class for every player. Exact mode gives
// definitive verdicts; MC mode certifies through disjoint confidence
// intervals and reports Inconclusive when the intervals overlap.
inline std::vector<DeviationReport> check_equilibrium(const StrategyProfile& sp,
                                                      const GameParams& gp, DeviationClass cls,
                                                      CheckMode mode,
                                                      const EquilibriumOptions& opt = {}) {
  sp.validate();
  gp.validate();

  std::vector<DeviationReport> reports;
  if (mode == CheckMode::Exact) {
    const UtilityVector base = exact_utilities(sp, gp, ExactOptions{opt.edge_cap});
    auto deltas = deviation_benefit_deltas(sp, gp.spread_prob, cls, opt);
    reports.reserve(deltas.size());
    for (auto& d : deltas) {
      DeviationReport r;
      const int i = d.deviation.player;
      r.baseline.mean = base.utility[static_cast<std::size_t>(i)];
      r.margin = d.benefit_delta - d.purchase_delta * gp.edge_cost;
      r.deviated.mean = r.baseline.mean + r.margin;
      r.verdict = r.margin > opt.epsilon + 1e-12 ? Verdict::BeneficialViolation
                                                 : Verdict::NoViolation;
      r.deviation = std::move(d.deviation);
      reports.push_back(std::move(r));
    }
    return reports;
  }

  // Monte Carlo mode.
  if (!(opt.epsilon > 0.0)) throw validation_error("eps: MC mode requires eps > 0");
  if (!(opt.delta > 0.0 && opt.delta < 1.0)) {
    throw validation_error("delta: MC mode requires delta in (0, 1)");
  }
  McOptions mc;
  mc.eps = opt.epsilon;
  mc.delta = opt.delta;
  mc.threads = opt.threads;
  mc.seed = derive_seed(opt.seed, 0);
  const McUtilities base = monte_carlo_utilities(sp, gp, mc);

  std::vector<Deviation> deviations;
  for (int i = 0; i < sp.n; ++i) {
    for (auto& dev : enumerate_deviations(sp, i, cls, opt.full_subset_cap)) {
      deviations.push_back(std::move(dev));
    }
  }
  reports.resize(deviations.size());
  for (std::size_t k = 0; k < deviations.size(); ++k) {
    const int i = deviations[k].player;
    StrategyProfile devsp = sp;
    devsp.purchases[static_cast<std::size_t>(i)] = deviations[k].purchases;
    McOptions devmc = mc;
    devmc.seed = derive_seed(opt.seed, k + 1);
    const McUtilities dev = monte_carlo_utilities(devsp, gp, devmc);

    DeviationReport& r = reports[k];
    r.deviation = std::move(deviations[k]);
    r.baseline = base.player[static_cast<std::size_t>(i)];
    r.deviated = dev.player[static_cast<std::size_t>(i)];
    r.margin = r.deviated.mean - r.baseline.mean;
    if (r.deviated.lower() > r.baseline.upper() + opt.epsilon) {
      r.verdict = Verdict::BeneficialViolation;
    } else if (r.deviated.upper() <= r.baseline.lower() + opt.epsilon) {
      r.verdict = Verdict::NoViolation;
    } else {
      r.verdict = Verdict::Inconclusive;
    }
  }
  return reports;
}

struct BestResponse {
  std::vector<int> purchases;
  double utility = 0.0;
};

// Exhaustive best response over all 2^(n-1) purchase sets, exact oracle.
// Ties break toward the lexicographically smallest set.
inline BestResponse best_response(const StrategyProfile& sp, const GameParams& gp, int player,
                                  const EquilibriumOptions& opt = {}) {
  sp.validate();
  gp.validate();
  if (player < 0 || player >= sp.n) throw validation_error("player: out of range");
  if (sp.n > opt.full_subset_cap) {
    throw cap_exceeded("best response is capped at n = " + std::to_string(opt.full_subset_cap) +
                       " players (profile has " + std::to_string(sp.n) + ")");
  }

  std::vector<int> others;
  for (int j = 0; j < sp.n; ++j) {
    if (j != player) others.push_back(j);
  }

  BestResponse best;
  bool have = false;
  const std::uint32_t count = std::uint32_t{1} << others.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    StrategyProfile cand = sp;
    auto& s = cand.purchases[static_cast<std::size_t>(player)];
    s.clear();
    for (std::size_t b = 0; b < others.size(); ++b) {
      if (mask & (std::uint32_t{1} << b)) s.push_back(others[b]);
    }
    const UtilityVector u = exact_utilities(cand, gp, ExactOptions{opt.edge_cap});
    const double value = u.utility[static_cast<std::size_t>(player)];
    if (!have || value > best.utility + 1e-12 ||
        (value > best.utility - 1e-12 &&
         std::lexicographical_compare(s.begin(), s.end(), best.purchases.begin(),
                                      best.purchases.end()))) {
      best.purchases = s;
      best.utility = value;
      have = true;
    }
  }
  return best;
}

// Lower bound on the connectivity-benefit change when a vertex in a size-n0
// component buys one edge into a size-n1 component (n0 <= n1): the vertex
// gains n1 whenever the attack starts outside both components and loses at
// most n0 when it starts in the larger one.
inline double join_component_benefit_bound(int n, int n0, int n1) {
  if (n0 < 1 || n1 < 1 || n < 1) throw validation_error("join bound: sizes must be >= 1");
  if (n0 > n1) throw validation_error("join bound: requires n0 <= n1");
  if (n0 + n1 > n) throw validation_error("join bound: requires n0 + n1 <= n");
  return static_cast<double>(n1) * (n - 2 * n0 - n1) / n;
}

struct DynamicsResult {
  std::vector<StrategyProfile> history;  // profile after each completed round
  bool converged = false;
  int rounds = 0;
};

// Sequential best-response rounds with an iteration cap. Offered as a probe
// only; convergence is not guaranteed.
inline DynamicsResult best_response_dynamics(StrategyProfile sp, const GameParams& gp,
                                             int max_rounds, const EquilibriumOptions& opt = {}) {
  if (max_rounds < 1) throw validation_error("rounds: must be >= 1");
  DynamicsResult out;
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (int i = 0; i < sp.n; ++i) {
      BestResponse br = best_response(sp, gp, i, opt);
      std::vector<int> sorted = sp.purchases[static_cast<std::size_t>(i)];
      std::sort(sorted.begin(), sorted.end());
      if (br.purchases != sorted) {
        sp.purchases[static_cast<std::size_t>(i)] = br.purchases;
        changed = true;
      }
    }
    out.history.push_back(sp);
    out.rounds = round + 1;
    if (!changed) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace netgame
