#include <doctest.h>

#include "bisect/graph.hpp"
#include "test_util.hpp"

using namespace bisect;

TEST_CASE("edge list parsing") {
  SUBCASE("empty graph") {
    const Graph g = graph_from_edge_list("4 0\n");
    CHECK(g.n() == 4);
    CHECK(g.m() == 0);
  }
  SUBCASE("path P4") {
    const Graph g = graph_from_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
  }
  SUBCASE("duplicate edge rejected") {
    CHECK_THROWS_WITH_AS(graph_from_edge_list("4 3\n0 1\n0 1\n2 3\n"),
                         doctest::Contains("duplicate edge"), Error);
  }
  SUBCASE("self loop rejected with line number") {
    CHECK_THROWS_WITH_AS(graph_from_edge_list("4 1\n2 2\n"), doctest::Contains("line 2"), Error);
  }
  SUBCASE("out of range vertex") {
    CHECK_THROWS_AS(graph_from_edge_list("4 1\n0 4\n"), Error);
  }
  SUBCASE("u >= v rejected") {
    CHECK_THROWS_AS(graph_from_edge_list("4 1\n1 0\n"), Error);
  }
  SUBCASE("bad header") {
    CHECK_THROWS_AS(graph_from_edge_list("oops\n"), Error);
  }
  SUBCASE("missing edge lines") {
    CHECK_THROWS_AS(graph_from_edge_list("4 2\n0 1\n"), Error);
  }
}

TEST_CASE("edge list round trip is sorted and stable") {
  const Graph g(5, {{3, 4}, {0, 2}, {0, 1}});
  const std::string text = graph_to_edge_list(g);
  CHECK(text == "5 3\n0 1\n0 2\n3 4\n");
  const Graph h = graph_from_edge_list(text);
  CHECK(graph_to_edge_list(h) == text);
}

TEST_CASE("cut width") {
  SUBCASE("empty graph") {
    const Graph g(4, {});
    CHECK(cut_width(g, testutil::halves(4)) == 0);
  }
  SUBCASE("P4 split in the middle") {
    CHECK(cut_width(testutil::path4(), testutil::halves(4)) == 1);
  }
  SUBCASE("every K4 bisection cuts 4") {
    const Graph g = testutil::k4();
    CHECK(cut_width(g, BisectionVector({1, 1, -1, -1})) == 4);
    CHECK(cut_width(g, BisectionVector({1, -1, 1, -1})) == 4);
    CHECK(cut_width(g, BisectionVector({1, -1, -1, 1})) == 4);
  }
  SUBCASE("sign symmetry") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
      const Graph g = testutil::random_graph(10, 0.4, rng);
      const BisectionVector x = testutil::random_bisection(10, rng);
      CHECK(cut_width(g, x) == cut_width(g, x.flipped()));
    }
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(cut_width(testutil::path4(), testutil::halves(6)), Error);
  }
}

TEST_CASE("bisection vector invariants") {
  CHECK_THROWS_AS(BisectionVector({1, 1, -1}), Error);        // nonzero sum
  CHECK_THROWS_AS(BisectionVector({2, 0, -1, -1}), Error);    // not ±1
  const BisectionVector y({-1, 1, 1, -1});
  CHECK(y.canonical().values == std::vector<int>{1, -1, -1, 1});
  CHECK(y.same_cut(y.flipped()));
}
