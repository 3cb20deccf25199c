#include <random>

#include "doctest.h"
#include "mstep/digraph.hpp"
#include "mstep/error.hpp"
#include "oracle.hpp"

using namespace mstep;

namespace {

std::set<int> as_set(const VertexSet& s) {
  std::set<int> out;
  s.for_each([&](Vertex v) { out.insert(static_cast<int>(v)); });
  return out;
}

}  // namespace

TEST_CASE("construction validates arcs and rows") {
  CHECK_THROWS_AS(Digraph::from_arcs(3, {{0, 3}}), InputError);
  CHECK_THROWS_WITH_AS(Digraph::from_arcs(2, {{5, 0}}), doctest::Contains("(5, 0)"), InputError);
  CHECK_THROWS_AS(DigraphBuilder(0), InputError);
  const std::vector<Word> bad{0b100, 0b001};  // vertex 2 in a 2-vertex digraph
  CHECK_THROWS_AS(Digraph::from_rows(2, bad), InputError);
  const std::vector<Word> wrong_size{1};
  CHECK_THROWS_AS(Digraph::from_rows(2, wrong_size), InputError);

  const Digraph d = Digraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 1}, {0, 1}});
  CHECK(d.arc_count() == 3);
  CHECK(d.has_arc(0, 2));
  CHECK_FALSE(d.has_arc(2, 0));
  CHECK(d.out_degree(0) == 2);
  CHECK(d.in_degree(1) == 2);
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 1}});
}

TEST_CASE("digraphs larger than one word") {
  DigraphBuilder b(130);
  for (Vertex v = 0; v < 130; ++v) b.add_arc(v, (v + 1) % 130);
  const Digraph d = b.build();
  CHECK(d.words_per_row() == 3);
  CHECK(d.has_arc(129, 0));
  CHECK(sources(d).empty());
  CHECK(is_weakly_connected(d));
  const Digraph p = m_step_digraph(d, 200);
  for (Vertex v = 0; v < 130; ++v) CHECK(p.has_arc(v, (v + 200) % 130));
}

TEST_CASE("sources and weak components") {
  const Digraph d = Digraph::from_arcs(6, {{0, 1}, {1, 1}, {2, 3}, {3, 2}, {4, 5}, {5, 5}});
  CHECK(sources(d) == VertexSet(6, {0, 4}));
  const auto comps = weak_components(d);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet(6, {0, 1}));
  CHECK(comps[1] == VertexSet(6, {2, 3}));
  CHECK(comps[2] == VertexSet(6, {4, 5}));
  CHECK_FALSE(is_weakly_connected(d));
  CHECK_FALSE(has_min_outdegree_one(Digraph::from_arcs(2, {{0, 1}})));
}

TEST_CASE("induced subdigraph relabels in order") {
  const Digraph d = Digraph::from_arcs(4, {{0, 2}, {2, 3}, {3, 0}, {1, 1}});
  const auto sub = induced_subdigraph(d, VertexSet(4, {0, 2, 3}));
  CHECK(sub.to_parent == std::vector<Vertex>{0, 2, 3});
  CHECK(sub.digraph.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(induced_subdigraph(d, VertexSet(4)), InputError);
  CHECK_THROWS_AS(induced_subdigraph(d, VertexSet(5, {0})), InputError);
}

TEST_CASE("m-step digraph, step neighbours and the walk oracle agree") {
  // Every digraph on up to 3 vertices, zero out-degree included, plus a
  // random sample on 4 and 5 vertices.
  std::vector<oracle::Adj> cases;
  for (int n = 1; n <= 3; ++n) oracle::for_each_digraph(n, false, [&](const oracle::Adj& a) {
    cases.push_back(a);
  });
  std::mt19937 rng(7);
  for (int i = 0; i < 600; ++i) cases.push_back(oracle::random_digraph(rng, 4 + i % 2, 0.3, false));

  for (const auto& adj : cases) {
    const Digraph d = oracle::to_digraph(adj);
    for (std::uint64_t m = 1; m <= 8; ++m) {
      const Digraph p = m_step_digraph(d, m);
      for (Vertex v = 0; v < d.order(); ++v) {
        const auto expected = oracle::prey(adj, static_cast<int>(v), m);
        REQUIRE(as_set(p.out_neighbors(v)) == expected);
        REQUIRE(as_set(step_neighbors(d, v, m, Direction::Prey)) == expected);
      }
    }
  }
}

TEST_CASE("predator direction is prey in the reverse digraph") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto adj = oracle::random_digraph(rng, 5, 0.3, true);
    const Digraph d = oracle::to_digraph(adj);
    for (std::uint64_t m : {1ULL, 3ULL, 9ULL}) {
      const Digraph p = m_step_digraph(d, m);
      for (Vertex v = 0; v < 5; ++v) {
        CHECK(step_neighbors(d, v, m, Direction::Predator) == p.in_neighbors(v));
      }
    }
  }
}

TEST_CASE("zero steps reach only the start vertex") {
  const Digraph d = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
  CHECK(step_neighbors(d, 1, 0, Direction::Prey) == VertexSet(2, {1}));
  CHECK_THROWS_AS(m_step_digraph(d, 0), InputError);
}

TEST_CASE("powers compose: D^(a+b) = D^a then D^b") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Digraph d = oracle::to_digraph(oracle::random_digraph(rng, 2 + i % 9, 0.25, false));
    for (std::uint64_t a = 1; a <= 4; ++a) {
      for (std::uint64_t b = 1; b <= 4; ++b) {
        CHECK(m_step_digraph(d, a + b) == compose(m_step_digraph(d, a), m_step_digraph(d, b)));
      }
    }
  }
}

TEST_CASE("huge step counts use periodicity") {
  std::mt19937 rng(5);
  const std::uint64_t big = std::uint64_t{1} << 60;
  for (int i = 0; i < 200; ++i) {
    const auto adj = oracle::random_digraph(rng, 3 + i % 8, 0.2, true);
    const Digraph d = oracle::to_digraph(adj);
    const Digraph p = m_step_digraph(d, big + 3);
    for (Vertex v = 0; v < d.order(); ++v) {
      const auto expected = oracle::prey(adj, static_cast<int>(v), big + 3);
      CHECK(as_set(p.out_neighbors(v)) == expected);
      CHECK(as_set(step_neighbors(d, v, big + 3, Direction::Prey)) == expected);
    }
  }
}
