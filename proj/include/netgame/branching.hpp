#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "netgame/errors.hpp"
#include "netgame/monte_carlo.hpp"
#include "netgame/parallel.hpp"
#include "netgame/rng.hpp"

namespace netgame {

// Offspring law of a branching process: an explicit pmf over {0..m}, or the
// sum of independent Bernoulli trials (binomial when the trials share one
// success probability, convolution otherwise).
class OffspringDistribution {
 public:
  static OffspringDistribution from_pmf(std::vector<double> pmf) {
    if (pmf.empty()) throw validation_error("pmf: must not be empty");
    double sum = 0.0;
    for (double x : pmf) {
      if (!(x >= 0.0)) throw validation_error("pmf: entries must be nonnegative");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw validation_error("pmf: entries sum to " + std::to_string(sum) + ", expected 1");
    }
    return OffspringDistribution(std::move(pmf));
  }

  static OffspringDistribution bernoulli_sum(int trials, double q) {
    if (trials < 0) throw validation_error("bernoulli sum: trials must be >= 0");
    if (!(q >= 0.0 && q <= 1.0)) throw validation_error("bernoulli sum: q must lie in [0, 1]");
    std::vector<double> pmf(static_cast<std::size_t>(trials) + 1, 0.0);
    if (trials == 0 || q == 0.0) {
      pmf[0] = 1.0;
    } else if (q == 1.0) {
      pmf[static_cast<std::size_t>(trials)] = 1.0;
    } else {
      pmf[0] = std::pow(1.0 - q, trials);
      for (int k = 1; k <= trials; ++k) {
        pmf[static_cast<std::size_t>(k)] = pmf[static_cast<std::size_t>(k - 1)] *
                                           (trials - k + 1) / static_cast<double>(k) * q /
                                           (1.0 - q);
      }
    }
    OffspringDistribution dist(std::move(pmf));
    dist.renormalize();
    return dist;
  }

  static OffspringDistribution bernoulli_sum(const std::vector<double>& qs) {
    std::vector<double> pmf{1.0};
    for (double q : qs) {
      if (!(q >= 0.0 && q <= 1.0)) throw validation_error("bernoulli sum: q must lie in [0, 1]");
      std::vector<double> next(pmf.size() + 1, 0.0);
      for (std::size_t k = 0; k < pmf.size(); ++k) {
        next[k] += pmf[k] * (1.0 - q);
        next[k + 1] += pmf[k] * q;
      }
      pmf = std::move(next);
    }
    OffspringDistribution dist(std::move(pmf));
    dist.renormalize();
    return dist;
  }

  const std::vector<double>& pmf() const { return pmf_; }
  int max_value() const { return static_cast<int>(pmf_.size()) - 1; }

  double mean() const {
    double m = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) m += static_cast<double>(k) * pmf_[k];
    return m;
  }

  // E[e^{theta xi}] via direct summation.
  double mgf(double theta) const { return std::exp(log_mgf(theta)); }

  // log E[e^{theta xi}], log-sum-exp so large theta stays finite.
  double log_mgf(double theta) const {
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      if (pmf_[k] <= 0.0) continue;
      hi = std::max(hi, std::log(pmf_[k]) + theta * static_cast<double>(k));
    }
    if (!std::isfinite(hi)) throw validation_error("mgf: distribution has no support");
    double sum = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      if (pmf_[k] <= 0.0) continue;
      sum += std::exp(std::log(pmf_[k]) + theta * static_cast<double>(k) - hi);
    }
    return hi + std::log(sum);
  }

  int sample(SplitMix64& rng) const {
    const double u = rng.uniform01();
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < pmf_.size(); ++k) {
      acc += pmf_[k];
      if (u < acc) return static_cast<int>(k);
    }
    return static_cast<int>(pmf_.size()) - 1;
  }

 private:
  explicit OffspringDistribution(std::vector<double> pmf) : pmf_(std::move(pmf)) {}

  void renormalize() {
    double sum = 0.0;
    for (double x : pmf_) sum += x;
    for (double& x : pmf_) x /= sum;
  }

  std::vector<double> pmf_;
};

struct ProgenyResult {
  bool overflow = false;
  std::uint64_t total = 0;  // individuals ever created, root included
};

// Total progeny of one root. Random-walk form of the breadth-first process:
// each processed individual removes itself and adds its offspring to the
// pending count. Supercritical runs hit the cap and report overflow.
inline ProgenyResult simulate_total_progeny(const OffspringDistribution& offspring,
                                            SplitMix64& rng,
                                            std::uint64_t progeny_cap = 10000000) {
  if (progeny_cap < 1) throw validation_error("progeny cap: must be >= 1");
  std::uint64_t pending = 1;
  std::uint64_t total = 0;
  while (pending > 0) {
    pending += static_cast<std::uint64_t>(offspring.sample(rng));
    pending -= 1;
    ++total;
    if (total > progeny_cap) return ProgenyResult{true, total};
  }
  return ProgenyResult{false, total};
}

// h = sup_{theta >= 0} { theta - log E[e^{theta xi}] }, located by ternary
// search (the objective is concave: log-mgf is convex). `boundary` flags a
// maximizer pinned at theta_max, where the true supremum may lie further
// right; the grid value then underestimates h, which only weakens the
// e^{-kh} bound.
struct RateFunction {
  double h = 0.0;
  double argmax_theta = 0.0;
  double theta_max = 0.0;
  bool boundary = false;
  bool subcritical = true;  // false means E[xi] >= 1 and h = 0 (bound vacuous)
};

inline RateFunction rate_function(const OffspringDistribution& offspring, double theta_max = 50.0,
                                  double resolution = 1e-8) {
  if (!(theta_max > 0.0)) throw validation_error("theta_max: must be > 0");
  RateFunction out;
  out.theta_max = theta_max;
  if (offspring.mean() >= 1.0) {
    out.subcritical = false;
    out.h = 0.0;
    return out;
  }
  auto objective = [&](double theta) { return theta - offspring.log_mgf(theta); };
  double lo = 0.0, hi = theta_max;
  while (hi - lo > resolution) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (objective(m1) < objective(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  out.argmax_theta = (lo + hi) / 2.0;
  out.h = std::max(objective(out.argmax_theta), 0.0);
  // The objective can keep creeping up toward theta_max by less than double
  // precision can resolve; treat "the edge value matches the interior
  // optimum" as a boundary supremum.
  const double edge = objective(theta_max);
  if (edge + 1e-9 * (1.0 + std::abs(out.h)) >= out.h) {
    out.boundary = true;
    out.argmax_theta = theta_max;
    out.h = std::max(edge, 0.0);
  }
  return out;
}

// Empirical check of Pr[|T| > k] <= e^{-kh}. `satisfied` allows one-sided
// binomial noise on the empirical side (z = 5), since the bound is tight for
// some offspring laws.
struct TailRow {
  std::uint64_t k = 0;
  double empirical = 0.0;
  double bound = 0.0;
  double ci_half = 0.0;
  bool satisfied = false;
};

struct TailOptionsGw {
  std::uint64_t runs = 1000000;
  std::uint64_t seed = 0;
  int threads = 0;
  std::uint64_t block_size = 8192;
  std::uint64_t progeny_cap = 10000000;
  double theta_max = 50.0;
};

inline std::vector<TailRow> verify_tail_bound(const OffspringDistribution& offspring,
                                              const std::vector<std::uint64_t>& k_list,
                                              const TailOptionsGw& opt = {}) {
  if (opt.runs < 1) throw validation_error("runs: must be >= 1");
  if (k_list.empty()) throw validation_error("k list: must not be empty");
  const RateFunction rate = rate_function(offspring, opt.theta_max);
  if (!rate.subcritical) {
    throw validation_error("offspring: tail verification requires a subcritical law (mean < 1)");
  }

  const std::uint64_t k_max = *std::max_element(k_list.begin(), k_list.end());
  struct Acc {
    std::vector<std::uint64_t> hist;  // total progeny clamped to k_max + 1
  };
  Acc zero;
  zero.hist.assign(static_cast<std::size_t>(k_max) + 2, 0);

  auto body = [&](Acc& acc, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t it = begin; it < end; ++it) {
      SplitMix64 rng = sample_stream(opt.seed, it);
      const ProgenyResult r = simulate_total_progeny(offspring, rng, opt.progeny_cap);
      const std::uint64_t slot = r.overflow ? k_max + 1 : std::min(r.total, k_max + 1);
      acc.hist[static_cast<std::size_t>(slot)] += 1;
    }
  };
  auto merge = [](Acc& a, const Acc& b) {
    for (std::size_t i = 0; i < a.hist.size(); ++i) a.hist[i] += b.hist[i];
  };
  Acc acc = blocked_reduce(opt.runs, opt.block_size, opt.threads, zero, body, merge);

  std::vector<TailRow> rows;
  for (std::uint64_t k : k_list) {
    std::uint64_t exceed = 0;
    for (std::size_t s = static_cast<std::size_t>(k) + 1; s < acc.hist.size(); ++s) {
      exceed += acc.hist[s];
    }
    TailRow row;
    row.k = k;
    row.empirical = static_cast<double>(exceed) / static_cast<double>(opt.runs);
    row.bound = std::exp(-static_cast<double>(k) * rate.h);
    const double var = std::max(row.empirical * (1.0 - row.empirical), 1e-12);
    row.ci_half = 5.0 * std::sqrt(var / static_cast<double>(opt.runs)) +
                  5.0 / static_cast<double>(opt.runs);
    row.satisfied = row.empirical <= row.bound + row.ci_half;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace netgame
