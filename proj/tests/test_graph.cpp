#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "irs/graph.hpp"

using namespace irs;

TEST_CASE("graph construction validates input") {
  CHECK_NOTHROW(Graph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), SelfLoopError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DuplicateEdgeError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParseError);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), ParseError);
}

TEST_CASE("adjacency and edge_index") {
  Graph g(4, {{2, 3}, {0, 1}, {1, 3}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.degree(3) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.edge_index(3, 1) == g.edge_index(1, 3));
  CHECK(g.edge_index(1, 3) >= 0);
  CHECK(g.edges()[g.edge_index(1, 3)] == std::pair<int, int>{1, 3});
  CHECK(g.edge_index(0, 2) == -1);
  // neighbors sorted ascending
  const auto& nb = g.neighbors(3);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0].to == 1);
  CHECK(nb[1].to == 2);
}

TEST_CASE("degree_stats counts isolates") {
  // component {0,1} is a lone edge, 4 is isolated, triangle 2-3-5
  Graph g(6, {{0, 1}, {2, 3}, {3, 5}, {2, 5}});
  auto st = degree_stats(g);
  CHECK(st.min_degree == 0);
  CHECK(st.max_degree == 2);
  CHECK(st.isolated_vertices == 1);
  CHECK(st.isolated_edges == 1);
}

TEST_CASE("edge list round trip") {
  Graph g(5, {{0, 4}, {1, 2}, {0, 1}});
  std::stringstream ss;
  write_edge_list(g, ss);
  std::stringstream in("# comment\n\n" + ss.str());
  Graph h = load_edge_list(in);
  CHECK(h.n() == g.n());
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list parse errors") {
  std::stringstream bad("0 x\n");
  CHECK_THROWS_AS(load_edge_list(bad), ParseError);
}

TEST_CASE("random regular generator") {
  SUBCASE("n=4 d=3 is K4") {
    Graph g = generate_random_regular(4, 3, 7);
    CHECK(g.m() == 6);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
  }
  SUBCASE("degrees exact across seeds") {
    for (std::uint64_t s : {1u, 2u, 3u}) {
      Graph g = generate_random_regular(50, 6, s);
      for (int v = 0; v < 50; ++v) CHECK(g.degree(v) == 6);
    }
  }
  SUBCASE("same seed reproduces") {
    Graph a = generate_random_regular(40, 5, 11);
    Graph b = generate_random_regular(40, 5, 11);
    CHECK(a.edges() == b.edges());
  }
  SUBCASE("invalid degree sequence") {
    CHECK_THROWS_AS(generate_random_regular(5, 3, 1), InfeasibleDegreeSequence);
    CHECK_THROWS_AS(generate_random_regular(4, 4, 1), InfeasibleDegreeSequence);
  }
}

TEST_CASE("min degree generator hits the floor") {
  Graph g = generate_min_degree_graph(100, 8, 0.05, 3);
  int mn = g.n();
  for (int v = 0; v < g.n(); ++v) mn = std::min(mn, g.degree(v));
  CHECK(mn >= 8);
  Graph h = generate_min_degree_graph(100, 8, 0.05, 3);
  CHECK(g.edges() == h.edges());
}
