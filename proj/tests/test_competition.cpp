#include <random>

#include "doctest.h"
#include "mstep/competition.hpp"
#include "mstep/enumeration.hpp"
#include "mstep/error.hpp"
#include "oracle.hpp"

using namespace mstep;

TEST_CASE("competition graphs of the built-in examples") {
  const Digraph d1 = figure("fig1_D1").digraph;
  for (std::uint64_t m = 1; m <= 6; ++m) {
    CHECK(competition_graph(d1, m) == Graph::from_edges(3, {{0, 1}, {0, 2}}));
  }
  // fig4_D: C^1 is the path 0-1-2, C^2 is a triangle.
  const Digraph d4 = figure("fig4_D").digraph;
  CHECK(competition_graph(d4, 1) == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(competition_graph(d4, 2) == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_THROWS_AS(competition_graph(d4, 0), InputError);
}

TEST_CASE("competition graph matches the walk oracle") {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    const auto adj = oracle::random_digraph(rng, 2 + i % 10, 0.2, i % 2 == 0);
    const Digraph d = oracle::to_digraph(adj);
    for (std::uint64_t m : {1ULL, 2ULL, 5ULL, 1ULL << 60}) {
      CHECK(oracle::edges_of(competition_graph(d, m)) == oracle::competition(adj, m));
    }
  }
}

TEST_CASE("triangle witness is the lexicographically first triangle") {
  std::mt19937 rng(23);
  for (int i = 0; i < 400; ++i) {
    const int n = 3 + i % 7;
    GraphBuilder b(n);
    std::bernoulli_distribution edge(0.35);
    oracle::EdgeSet e;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) {
          b.add_edge(u, v);
          e.insert({u, v});
        }
      }
    }
    const auto check = is_triangle_free(b.build());
    CHECK(check.triangle_free == !oracle::has_triangle(n, e));
    if (check.triangle_free) {
      CHECK_FALSE(check.witness);
      continue;
    }
    const auto [a, bb, c] = *check.witness;
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      for (int y = x + 1; y < n && !found; ++y) {
        for (int z = y + 1; z < n && !found; ++z) {
          if (e.count({x, y}) && e.count({x, z}) && e.count({y, z})) {
            CHECK(std::array<Vertex, 3>{Vertex(x), Vertex(y), Vertex(z)} ==
                  std::array<Vertex, 3>{a, bb, c});
            found = true;
          }
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("components are ordered by smallest member") {
  const Graph g = Graph::from_edges(6, {{4, 1}, {2, 5}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == VertexSet(6, {0}));
  CHECK(comps[1] == VertexSet(6, {1, 4}));
  CHECK(comps[2] == VertexSet(6, {2, 5}));
  CHECK(comps[3] == VertexSet(6, {3}));
}

TEST_CASE("star decomposition") {
  SUBCASE("two stars") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {3, 4}});
    const auto r = star_decomposition(g, VertexSet(5, {0, 4}));
    REQUIRE(succeeded(r));
    const auto& stars = std::get<StarDecomposition>(r).stars;
    REQUIRE(stars.size() == 2);
    CHECK(stars[0].center == 0);
    CHECK(stars[0].leaves == VertexSet(5, {1, 2}));
    CHECK(stars[1].center == 4);
    CHECK(stars[1].leaves == VertexSet(5, {3}));
  }
  SUBCASE("single edge prefers the lower allowed endpoint") {
    const Graph g = Graph::from_edges(2, {{0, 1}});
    CHECK(std::get<StarDecomposition>(star_decomposition(g, VertexSet::full(2))).stars[0].center ==
          0);
  }
  SUBCASE("isolated vertex is trivial") {
    const auto r = star_decomposition(Graph::from_edges(3, {{0, 1}}), VertexSet(3, {0}));
    REQUIRE_FALSE(succeeded(r));
    CHECK(std::get<StarFailure>(r).reason == StarFailure::Reason::Trivial);
    CHECK(std::get<StarFailure>(r).component == VertexSet(3, {2}));
  }
  SUBCASE("path on four vertices is not a star") {
    const auto r =
        star_decomposition(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), VertexSet::full(4));
    REQUIRE_FALSE(succeeded(r));
    CHECK(std::get<StarFailure>(r).reason == StarFailure::Reason::NotAStar);
  }
  SUBCASE("triangle is not a star") {
    const auto r =
        star_decomposition(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), VertexSet::full(3));
    CHECK(std::get<StarFailure>(r).reason == StarFailure::Reason::NotAStar);
  }
  SUBCASE("center outside the allowed set") {
    const auto r = star_decomposition(Graph::from_edges(3, {{0, 1}, {0, 2}}), VertexSet(3, {1}));
    REQUIRE_FALSE(succeeded(r));
    CHECK(std::get<StarFailure>(r).reason == StarFailure::Reason::CenterNotSource);
    CHECK_FALSE(std::get<StarFailure>(r).describe().empty());
  }
}

TEST_CASE("star decomposition agrees with a direct star test") {
  std::mt19937 rng(29);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + i % 6;
    const auto adj = oracle::random_digraph(rng, n, 0.3, true);
    const Graph g = competition_graph(oracle::to_digraph(adj), 1 + i % 3);
    const bool single_star = oracle::is_star(n, oracle::edges_of(g));
    const auto r = star_decomposition(g, VertexSet::full(n));
    if (components(g).size() == 1) CHECK(succeeded(r) == single_star);
  }
}

TEST_CASE("common prey persists to every later step") {
  // For all digraphs with out-degree >= 1 on up to 4 vertices: C^i is a
  // subgraph of C^j whenever i < j.
  for (int n = 1; n <= 4; ++n) {
    oracle::for_each_digraph(n, true, [&](const oracle::Adj& adj) {
      const Digraph d = oracle::to_digraph(adj);
      std::vector<Graph> graphs;
      for (std::uint64_t m = 1; m <= 6; ++m) graphs.push_back(competition_graph(d, m));
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
          for (const Edge& e : graphs[i].edges()) REQUIRE(graphs[j].has_edge(e.u, e.v));
        }
      }
    });
  }
}
