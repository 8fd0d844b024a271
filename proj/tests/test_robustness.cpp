#include <catch2/catch_amalgamated.hpp>

#include "netgame/generators.hpp"
#include "netgame/robustness.hpp"
#include "oracles.hpp"

using namespace netgame;

TEST_CASE("robustness of named graphs", "[robustness]") {
  SECTION("complete graph: all other vertices must go") {
    Graph k5 = induced_graph(make_complete(5));
    RobustnessCertificate cert = edge_robustness(k5, 0, 1);
    REQUIRE(cert.robustness == 3);
    REQUIRE(cert.witness_cut.size() == 3);
  }
  SECTION("cycle: one vertex on the far arc") {
    Graph c8 = induced_graph(make_cycle(8));
    RobustnessCertificate cert = edge_robustness(c8, 0, 1);
    REQUIRE(cert.robustness == 1);
    REQUIRE(cert.witness_cut.size() == 1);
  }
  SECTION("tree edge is already the only path") {
    Graph t = induced_graph(make_tree(7, 2));
    RobustnessCertificate cert = edge_robustness(t, 0, 1);
    REQUIRE(cert.robustness == 0);
    REQUIRE(cert.witness_cut.empty());
  }
  SECTION("absent edge is rejected") {
    Graph c5 = induced_graph(make_cycle(5));
    REQUIRE_THROWS_AS(edge_robustness(c5, 0, 2), validation_error);
  }
}

TEST_CASE("robustness equals the subset-enumeration oracle", "[robustness]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);  // 4..10
    const int max_m = n * (n - 1) / 2;
    const int m = std::min(max_m, 3 + static_cast<int>(derive_seed(seed, 1) % (2 * n)));
    Graph g = induced_graph(oracles::random_graph_profile(n, m, derive_seed(4242, seed)));
    for (const Edge& e : g.edges()) {
      RobustnessCertificate cert = edge_robustness(g, e.u, e.v);
      REQUIRE(cert.robustness == oracles::brute_edge_robustness(g, e.u, e.v));
    }
  }
}

TEST_CASE("witness cut works and is minimal", "[robustness]") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    Graph g = induced_graph(oracles::random_graph_profile(n, n + 3, derive_seed(31, seed)));
    for (const Edge& e : g.edges()) {
      RobustnessCertificate cert = edge_robustness(g, e.u, e.v);
      REQUIRE(static_cast<int>(cert.witness_cut.size()) == cert.robustness);
      std::vector<char> removed(n, 0);
      for (int x : cert.witness_cut) {
        REQUIRE(x != cert.u);
        REQUIRE(x != cert.v);
        removed[x] = 1;
      }
      // deleting the witness leaves the direct edge as the only path
      REQUIRE_FALSE(oracles::connected_avoiding(g, cert.u, cert.v, removed));
    }
  }
}

TEST_CASE("robust edge search on named graphs", "[robustness]") {
  SECTION("dense graph has a strongly protected edge") {
    Graph k10 = induced_graph(make_complete(10));
    auto found = robust_edge_exists(k10, 2);
    REQUIRE(found.has_value());
    REQUIRE(found->robustness == 8);
  }
  SECTION("cycle never reaches robustness 2") {
    Graph c20 = induced_graph(make_cycle(20));
    REQUIRE_FALSE(robust_edge_exists(c20, 1).has_value());
  }
  SECTION("trees have no protected edge even at gamma 0") {
    Graph t = induced_graph(make_tree(9, 2));
    REQUIRE_FALSE(robust_edge_exists(t, 0).has_value());
  }
}

TEST_CASE("dense instances satisfying the edge-count hypothesis have a witness", "[robustness]") {
  // |E| >= 2.5 gamma (n - gamma) - 1 and n > 3 gamma force an edge needing
  // gamma + 1 deletions.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int gamma = 1 + static_cast<int>(seed % 2);
    const int n = 10 + static_cast<int>(seed % 5);
    const int required = static_cast<int>(std::ceil(2.5 * gamma * (n - gamma) - 1.0));
    if (required > n * (n - 1) / 2) continue;
    Graph g = induced_graph(oracles::random_graph_profile(n, required, derive_seed(88, seed)));
    REQUIRE(n > 3 * gamma);
    auto found = robust_edge_exists(g, gamma);
    REQUIRE(found.has_value());
    REQUIRE(found->robustness >= gamma + 1);
  }
}
