#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mstep/digraph.hpp"
#include "mstep/graph.hpp"

namespace mstep {

/// Joins distinct x, y whenever their out-rows in `step_digraph` intersect.
/// Applied to D^m this is the m-step competition graph.
Graph common_prey_graph(const Digraph& step_digraph);

/// C^m(D): distinct x, y adjacent iff they share an m-step prey. m >= 1.
Graph competition_graph(const Digraph& d, std::uint64_t m);

struct TriangleCheck {
  bool triangle_free = true;
  /// Lexicographically first triangle (a < b < c) when not triangle-free.
  std::optional<std::array<Vertex, 3>> witness;
};

TriangleCheck is_triangle_free(const Graph& g);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

struct Star {
  Vertex center = 0;
  VertexSet leaves;
};

struct StarDecomposition {
  /// One star per component, in component order.
  std::vector<Star> stars;
};

struct StarFailure {
  enum class Reason { NotAStar, Trivial, CenterNotSource };

  Reason reason = Reason::NotAStar;
  VertexSet component;

  std::string describe() const;
};

using StarDecompositionResult = std::variant<StarDecomposition, StarFailure>;

/// Succeeds iff every component of `g` is a nontrivial star K_{1,t} (t >= 1)
/// whose center lies in `centers`. For components of three or more vertices
/// the center is forced; for a single edge the lower endpoint in `centers`
/// is chosen. On failure, reports the first offending component.
StarDecompositionResult star_decomposition(const Graph& g, const VertexSet& centers);

inline bool succeeded(const StarDecompositionResult& r) {
  return std::holds_alternative<StarDecomposition>(r);
}

}  // namespace mstep
