#include "mstep/competition.hpp"

#include "mstep/error.hpp"

namespace mstep {

Graph common_prey_graph(const Digraph& step_digraph) {
  const std::size_t n = step_digraph.order();
  GraphBuilder builder(n);
  for (Vertex x = 0; x < n; ++x) {
    auto row_x = step_digraph.out_row(x);
    if (!bits::any(row_x)) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (bits::intersects(row_x, step_digraph.out_row(y))) builder.add_edge(x, y);
    }
  }
  return builder.build();
}

Graph competition_graph(const Digraph& d, std::uint64_t m) {
  return common_prey_graph(m_step_digraph(d, m));
}

TriangleCheck is_triangle_free(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  for (Vertex a = 0; a < n; ++a) {
    auto row_a = g.row(a);
    for (Vertex b = a + 1; b < n; ++b) {
      if (!bits::test(row_a, b)) continue;
      auto row_b = g.row(b);
      // Smallest common neighbour above b.
      for (std::size_t i = b / kWordBits; i < words; ++i) {
        Word common = row_a[i] & row_b[i];
        if (i == b / kWordBits) {
          const auto shift = b % kWordBits;
          common &= shift == kWordBits - 1 ? Word{0} : ~Word{0} << (shift + 1);
        }
        if (common != 0) {
          const auto c = static_cast<Vertex>(i * kWordBits + std::countr_zero(common));
          return {false, std::array<Vertex, 3>{a, b, c}};
        }
      }
    }
  }
  return {};
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  VertexSet unvisited = VertexSet::full(n);
  while (auto start = unvisited.first()) {
    VertexSet component(n, {*start});
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next(n);
      auto words = next.mutable_words();
      frontier.for_each([&](Vertex u) {
        auto row = g.row(u);
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= row[i];
      });
      next -= component;
      component |= next;
      frontier = std::move(next);
    }
    unvisited -= component;
    out.push_back(std::move(component));
  }
  return out;
}

std::string StarFailure::describe() const {
  std::string members;
  component.for_each([&](Vertex v) {
    if (!members.empty()) members += ' ';
    members += std::to_string(v);
  });
  switch (reason) {
    case Reason::NotAStar:
      return "component {" + members + "} is not a star";
    case Reason::Trivial:
      return "component {" + members + "} is a trivial star (single vertex)";
    case Reason::CenterNotSource:
      return "component {" + members + "} has no admissible center";
  }
  return "unknown failure";
}

StarDecompositionResult star_decomposition(const Graph& g, const VertexSet& centers) {
  if (centers.universe() != g.order()) {
    throw InputError("center set universe does not match graph order");
  }
  StarDecomposition result;
  for (VertexSet& component : components(g)) {
    const std::size_t size = component.size();
    if (size == 1) return StarFailure{StarFailure::Reason::Trivial, std::move(component)};

    std::size_t degree_sum = 0;
    std::optional<Vertex> hub;
    component.for_each([&](Vertex v) {
      const std::size_t deg = g.degree(v);
      degree_sum += deg;
      if (deg == size - 1 && !hub) hub = v;
    });
    if (degree_sum != 2 * (size - 1) || !hub) {
      return StarFailure{StarFailure::Reason::NotAStar, std::move(component)};
    }

    std::optional<Vertex> center;
    if (size == 2) {
      component.for_each([&](Vertex v) {
        if (!center && centers.contains(v)) center = v;
      });
    } else if (centers.contains(*hub)) {
      center = hub;
    }
    if (!center) {
      return StarFailure{StarFailure::Reason::CenterNotSource, std::move(component)};
    }
    VertexSet leaves = component;
    leaves.erase(*center);
    result.stars.push_back({*center, std::move(leaves)});
  }
  return result;
}

}  // namespace mstep
