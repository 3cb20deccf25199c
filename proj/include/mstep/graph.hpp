#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mstep/vertex_set.hpp"

namespace mstep {

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on 0..n-1: symmetric, irreflexive adjacency.
class Graph {
 public:
  using Rows = boost::container::small_vector<Word, 8>;

  /// Throws InputError for self-edges or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n,
                          std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph empty(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  std::span<const Word> row(Vertex v) const {
    return {adj_.data() + v * words_, words_};
  }
  VertexSet neighbors(Vertex v) const {
    return VertexSet::from_words(n_, row(v));
  }
  bool has_edge(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && bits::test(row(u), v);
  }
  std::size_t degree(Vertex v) const { return bits::count(row(v)); }
  std::size_t edge_count() const { return bits::count(bits::view(adj_)) / 2; }
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;
  Graph(std::size_t n, Rows adj) : n_(n), words_(words_for(n)), adj_(std::move(adj)) {}

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  Rows adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  GraphBuilder& add_edge(Vertex u, Vertex v);
  Graph build() const { return Graph(n_, rows_); }

 private:
  std::size_t n_;
  std::size_t words_;
  Graph::Rows rows_;
};

}  // namespace mstep
