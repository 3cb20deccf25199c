#include "mstep/graph.hpp"

#include <string>

#include "mstep/error.hpp"

namespace mstep {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return builder.build();
}

Graph Graph::from_edges(
    std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder builder(n);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return builder.build();
}

Graph Graph::empty(std::size_t n) { return GraphBuilder(n).build(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    bits::for_each(row(u), [&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {
  if (n == 0) throw InputError("graph order must be positive");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                     "} out of range for order " + std::to_string(n_));
  }
  if (u == v) {
    throw InputError("self-edge at vertex " + std::to_string(u));
  }
  bits::set(std::span<Word>(rows_.data() + u * words_, words_), v);
  bits::set(std::span<Word>(rows_.data() + v * words_, words_), u);
  return *this;
}

}  // namespace mstep
