#include <doctest.h>

#include <cmath>

#include "bisect/generators.hpp"
#include "bisect/oracle.hpp"
#include "test_util.hpp"

using namespace bisect;

TEST_CASE("planted bisection generator") {
  SUBCASE("p=1, q=0 makes two disjoint cliques") {
    const PlantedInstance inst = gen_planted_bisection(8, 1.0, 0.0, 5);
    CHECK(inst.graph.m() == 12);  // two K4s
    CHECK(cut_width(inst.graph, inst.planted) == 0);
    for (auto [u, v] : inst.graph.edges()) CHECK(inst.planted[u] == inst.planted[v]);
    // each part is a clique
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (inst.planted[u] == inst.planted[v]) CHECK(inst.graph.has_edge(u, v));
  }
  SUBCASE("p=0, q=1 makes the complete bipartite graph across the cut") {
    const PlantedInstance inst = gen_planted_bisection(8, 0.0, 1.0, 5);
    CHECK(inst.graph.m() == 16);
    CHECK(cut_width(inst.graph, inst.planted) == 16);
  }
  SUBCASE("planted cut concentrates around q (n/2)^2") {
    double mean = 0.0;
    const int trials = 20;
    for (int s = 0; s < trials; ++s) {
      const PlantedInstance inst = gen_planted_bisection(200, 0.25, 0.05, 7 + s);
      mean += cut_width(inst.graph, inst.planted);
    }
    mean /= trials;
    const double expect = 0.05 * 100 * 100;
    const double sigma = std::sqrt(100.0 * 100.0 * 0.05 * 0.95 / trials);
    CHECK(std::fabs(mean - expect) <= 4.0 * sigma);
  }
  SUBCASE("deterministic per seed") {
    const PlantedInstance a = gen_planted_bisection(40, 0.3, 0.1, 123);
    const PlantedInstance b = gen_planted_bisection(40, 0.3, 0.1, 123);
    CHECK(graph_to_edge_list(a.graph) == graph_to_edge_list(b.graph));
    CHECK(a.planted.values == b.planted.values);
    const PlantedInstance c = gen_planted_bisection(40, 0.3, 0.1, 124);
    CHECK(graph_to_edge_list(a.graph) != graph_to_edge_list(c.graph));
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(gen_planted_bisection(7, 0.5, 0.1, 1), Error);
    CHECK_THROWS_AS(gen_planted_bisection(8, 1.5, 0.1, 1), Error);
    CHECK_THROWS_AS(gen_planted_bisection(8, 0.5, -0.1, 1), Error);
  }
}

TEST_CASE("hypercube generator") {
  SUBCASE("k=1 is a single edge") {
    const Graph g = gen_hypercube(1);
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
  }
  SUBCASE("k=3 is 3-regular with 12 edges") {
    const Graph g = gen_hypercube(3);
    CHECK(g.n() == 8);
    CHECK(g.m() == 12);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
  }
  SUBCASE("k=4 bisection width is 8") {
    CHECK(brute_force_bw(gen_hypercube(4)).bw == 8);
  }
  SUBCASE("k=0 rejected") { CHECK_THROWS_AS(gen_hypercube(0), Error); }
}

TEST_CASE("planted regular generator") {
  SUBCASE("(4,1,0): two disjoint inner edges") {
    const PlantedInstance inst = gen_planted_regular(4, 1, 0, 3);
    CHECK(inst.graph.m() == 2);
    CHECK(cut_width(inst.graph, inst.planted) == 0);
    for (int v = 0; v < 4; ++v) CHECK(inst.graph.degree(v) == 1);
  }
  SUBCASE("(8,3,2): 3-regular with exactly two cross edges") {
    const PlantedInstance inst = gen_planted_regular(8, 3, 2, 11);
    for (int v = 0; v < 8; ++v) CHECK(inst.graph.degree(v) == 3);
    CHECK(cut_width(inst.graph, inst.planted) == 2);
  }
  SUBCASE("(6,3,0) is infeasible") {
    CHECK_THROWS_AS(gen_planted_regular(6, 3, 0, 1), Error);
  }
  SUBCASE("degrees and planted cut hold across seeds and parameters") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      for (auto [n, r, b] : {std::tuple{12, 3, 4}, {16, 5, 6}, {20, 4, 8}}) {
        const PlantedInstance inst = gen_planted_regular(n, r, b, seed);
        for (int v = 0; v < n; ++v) CHECK(inst.graph.degree(v) == r);
        CHECK(cut_width(inst.graph, inst.planted) == b);
      }
    }
  }
  SUBCASE("deterministic per seed") {
    const PlantedInstance a = gen_planted_regular(16, 5, 6, 77);
    const PlantedInstance b = gen_planted_regular(16, 5, 6, 77);
    CHECK(graph_to_edge_list(a.graph) == graph_to_edge_list(b.graph));
  }
  SUBCASE("odd stub parity rejected") {
    // r*(n/2) - b = 3*5 - 2 = 13, odd
    CHECK_THROWS_AS(gen_planted_regular(10, 3, 2, 1), Error);
  }
}

TEST_CASE("fixtures") {
  SUBCASE("path") {
    const Fixture f = make_fixture("path");
    CHECK(f.graph.n() == 10);
    CHECK(f.graph.m() == 15);
    CHECK(cut_width(f.graph, f.reference) == 1);
    CHECK(brute_force_bw(f.graph).bw == 1);
  }
  SUBCASE("isolated") {
    const Fixture f = make_fixture("isolated");
    CHECK(f.graph.n() == 6);
    CHECK(brute_force_bw(f.graph).bw == 2);
    CHECK(cut_width(f.graph, f.reference) == 2);
  }
  SUBCASE("lattice") {
    const Fixture f = make_fixture("lattice");
    CHECK(f.graph.n() == 24);
    CHECK(f.graph.m() == 48);
    CHECK(cut_width(f.graph, f.reference) == 2);
    CHECK(brute_force_bw(f.graph).bw == 2);
  }
  SUBCASE("unknown name") { CHECK_THROWS_AS(make_fixture("nope"), Error); }
}
