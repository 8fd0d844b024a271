#include <catch2/catch_amalgamated.hpp>

#include "netgame/branching.hpp"

using namespace netgame;

namespace {

// Test-local objective evaluation for stationarity checks.
double objective(const OffspringDistribution& d, double theta) {
  double mgf = 0.0;
  for (std::size_t k = 0; k < d.pmf().size(); ++k) {
    mgf += d.pmf()[k] * std::exp(theta * static_cast<double>(k));
  }
  return theta - std::log(mgf);
}

}  // namespace

TEST_CASE("offspring distribution construction", "[branching]") {
  SECTION("pmf must sum to one") {
    REQUIRE_THROWS_AS(OffspringDistribution::from_pmf({0.5, 0.4}), validation_error);
    REQUIRE_THROWS_AS(OffspringDistribution::from_pmf({0.5, -0.5, 1.0}), validation_error);
    REQUIRE_NOTHROW(OffspringDistribution::from_pmf({0.25, 0.75}));
  }
  SECTION("binomial matches the convolution route") {
    OffspringDistribution a = OffspringDistribution::bernoulli_sum(6, 0.2);
    OffspringDistribution b =
        OffspringDistribution::bernoulli_sum(std::vector<double>(6, 0.2));
    REQUIRE(a.pmf().size() == b.pmf().size());
    for (std::size_t k = 0; k < a.pmf().size(); ++k) {
      REQUIRE(a.pmf()[k] == Catch::Approx(b.pmf()[k]).margin(1e-12));
    }
    REQUIRE(a.mean() == Catch::Approx(1.2).margin(1e-12));
  }
  SECTION("heterogeneous convolution") {
    OffspringDistribution d = OffspringDistribution::bernoulli_sum({0.5, 0.25});
    REQUIRE(d.pmf()[0] == Catch::Approx(0.375));
    REQUIRE(d.pmf()[1] == Catch::Approx(0.5));
    REQUIRE(d.pmf()[2] == Catch::Approx(0.125));
  }
}

TEST_CASE("total progeny simulation", "[branching]") {
  SECTION("immediate extinction") {
    OffspringDistribution d = OffspringDistribution::from_pmf({1.0});
    for (std::uint64_t i = 0; i < 20; ++i) {
      SplitMix64 rng = sample_stream(1, i);
      ProgenyResult r = simulate_total_progeny(d, rng);
      REQUIRE_FALSE(r.overflow);
      REQUIRE(r.total == 1);
    }
  }
  SECTION("deterministic doubling overflows") {
    OffspringDistribution d = OffspringDistribution::from_pmf({0.0, 0.0, 1.0});
    SplitMix64 rng(5);
    ProgenyResult r = simulate_total_progeny(d, rng, 10000);
    REQUIRE(r.overflow);
  }
  SECTION("geometric law of single-Bernoulli offspring") {
    // Pr[|T| > k] = q^k; at q = .3, k = 5 that is 0.00243.
    OffspringDistribution d = OffspringDistribution::bernoulli_sum(1, 0.3);
    const std::uint64_t runs = 1000000;
    std::uint64_t exceed5 = 0;
    for (std::uint64_t i = 0; i < runs; ++i) {
      SplitMix64 rng = sample_stream(321, i);
      if (simulate_total_progeny(d, rng).total > 5) ++exceed5;
    }
    const double emp = static_cast<double>(exceed5) / runs;
    const double truth = std::pow(0.3, 5);
    REQUIRE(emp == Catch::Approx(truth).margin(5 * std::sqrt(truth / runs)));
  }
}

TEST_CASE("rate function", "[branching]") {
  SECTION("Bernoulli(.3): supremum approached at the boundary") {
    OffspringDistribution d = OffspringDistribution::bernoulli_sum(1, 0.3);
    RateFunction rf = rate_function(d, 30.0);
    REQUIRE(rf.subcritical);
    REQUIRE(rf.boundary);
    REQUIRE(rf.h == Catch::Approx(-std::log(0.3)).margin(1e-3));
    REQUIRE(rf.h <= -std::log(0.3) + 1e-9);  // grid value never exceeds the supremum
  }
  SECTION("all-zero offspring: objective is theta itself") {
    OffspringDistribution d = OffspringDistribution::from_pmf({1.0});
    RateFunction rf = rate_function(d, 12.0);
    REQUIRE(rf.boundary);
    REQUIRE(rf.h == Catch::Approx(12.0));
  }
  SECTION("interior maximizer is stationary") {
    // Truncated Poisson(0.6) over 0..10.
    std::vector<double> pmf(11);
    double lambda = 0.6, z = 0.0, term = std::exp(-lambda);
    for (int k = 0; k <= 10; ++k) {
      pmf[k] = term;
      z += term;
      term *= lambda / (k + 1);
    }
    for (auto& x : pmf) x /= z;
    OffspringDistribution d = OffspringDistribution::from_pmf(pmf);
    RateFunction rf = rate_function(d, 50.0);
    REQUIRE(rf.subcritical);
    REQUIRE_FALSE(rf.boundary);
    const double step = 1e-4;
    const double deriv =
        (objective(d, rf.argmax_theta + step) - objective(d, rf.argmax_theta - step)) / (2 * step);
    REQUIRE(std::abs(deriv) <= 1e-6);
  }
  SECTION("supercritical input yields a vacuous rate") {
    OffspringDistribution d = OffspringDistribution::from_pmf({0.0, 0.0, 1.0});
    RateFunction rf = rate_function(d, 10.0);
    REQUIRE_FALSE(rf.subcritical);
    REQUIRE(rf.h == 0.0);
  }
  SECTION("stochastically larger offspring lowers the rate") {
    const double h2 = rate_function(OffspringDistribution::bernoulli_sum(1, 0.2), 40.0).h;
    const double h3 = rate_function(OffspringDistribution::bernoulli_sum(1, 0.3), 40.0).h;
    const double h4 = rate_function(OffspringDistribution::bernoulli_sum(1, 0.4), 40.0).h;
    REQUIRE(h2 > h3);
    REQUIRE(h3 > h4);
  }
}

TEST_CASE("tail bound verification", "[branching]") {
  SECTION("Bernoulli(.3) tail equals the geometric law and obeys the bound") {
    OffspringDistribution d = OffspringDistribution::bernoulli_sum(1, 0.3);
    std::vector<std::uint64_t> ks;
    for (std::uint64_t k = 0; k <= 10; ++k) ks.push_back(k);
    TailOptionsGw opt;
    opt.runs = 1000000;
    opt.seed = 2718;
    opt.theta_max = 30.0;
    auto rows = verify_tail_bound(d, ks, opt);
    REQUIRE(rows.size() == 11);
    REQUIRE(rows[0].bound == Catch::Approx(1.0));  // k = 0 is trivial
    for (const auto& row : rows) {
      REQUIRE(row.satisfied);
      const double truth = std::pow(0.3, static_cast<double>(row.k));
      const double slack = 5 * std::sqrt(std::max(truth * (1 - truth), 1e-12) / opt.runs) +
                           5.0 / static_cast<double>(opt.runs);
      REQUIRE(row.empirical == Catch::Approx(truth).margin(slack));
    }
  }
  SECTION("many small Bernoulli trials: short totals dominate") {
    // 100 trials at q = 1/1000 (mean 0.1). With n = 1000 and m = n^{2/3}
    // the working exponent is theta' = log(n)/3 - 1, where the mgf stays
    // below e/(e-1); runs past 9 individuals are then vanishingly rare.
    OffspringDistribution d = OffspringDistribution::bernoulli_sum(100, 0.001);
    const double theta_prime = std::log(1000.0) / 3.0 - 1.0;
    REQUIRE(d.mgf(theta_prime) <= std::exp(1.0) / (std::exp(1.0) - 1.0) + 1e-9);

    TailOptionsGw opt;
    opt.runs = 1000000;
    opt.seed = 31;
    auto rows = verify_tail_bound(d, {9}, opt);
    REQUIRE(rows[0].satisfied);
    REQUIRE(rows[0].empirical <= 1e-4);
  }
  SECTION("supercritical input is rejected") {
    OffspringDistribution d = OffspringDistribution::from_pmf({0.0, 0.0, 1.0});
    REQUIRE_THROWS_AS(verify_tail_bound(d, {1}, TailOptionsGw{}), validation_error);
  }
}
