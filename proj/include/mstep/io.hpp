#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "mstep/digraph.hpp"
#include "mstep/graph.hpp"

namespace mstep {

// Edge-list text format shared by digraphs and graphs:
//
//   # comment (anything after '#' on a line is ignored)
//   n
//   u v
//   ...
//
// Vertices are 0-based. For graphs each line is an undirected edge.

Digraph parse_digraph(std::string_view text);
Digraph read_digraph(std::istream& in);
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Digraph& d);
std::string to_edge_list(const Graph& g);

/// DOT output. `labels`, when non-empty, must have one entry per vertex and
/// is emitted as node label attributes; node ids stay numeric.
std::string to_dot(const Digraph& d, std::span<const std::string> labels = {},
                   std::string_view name = "D");
std::string to_dot(const Graph& g, std::span<const std::string> labels = {},
                   std::string_view name = "G");

}  // namespace mstep
