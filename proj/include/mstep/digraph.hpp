#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mstep/vertex_set.hpp"

namespace mstep {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Labeled digraph on vertices 0..n-1. Loops are allowed, parallel arcs
/// are not representable. Out- and in-neighbourhoods are stored as packed
/// rows so that both directions are available without recomputation.
///
/// Instances are immutable once built; use DigraphBuilder or the static
/// factories to construct one.
class Digraph {
 public:
  using Rows = boost::container::small_vector<Word, 8>;

  /// Throws InputError naming the first pair with an endpoint >= n.
  static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);
  static Digraph from_arcs(std::size_t n,
                           std::initializer_list<std::pair<Vertex, Vertex>> arcs);

  /// Builds from packed out-rows: `rows` holds n rows of words_for(n) words.
  /// Bits at or beyond n are rejected.
  static Digraph from_rows(std::size_t n, std::span<const Word> rows);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  std::span<const Word> out_row(Vertex v) const {
    return {out_.data() + v * words_, words_};
  }
  std::span<const Word> in_row(Vertex v) const {
    return {in_.data() + v * words_, words_};
  }
  std::span<const Word> out_rows() const { return bits::view(out_); }

  VertexSet out_neighbors(Vertex v) const;
  VertexSet in_neighbors(Vertex v) const;

  bool has_arc(Vertex from, Vertex to) const;
  std::size_t out_degree(Vertex v) const { return bits::count(out_row(v)); }
  std::size_t in_degree(Vertex v) const { return bits::count(in_row(v)); }

  std::size_t arc_count() const { return bits::count(bits::view(out_)); }
  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  Digraph(std::size_t n, Rows out);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  Rows out_;
  Rows in_;
};

class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n);

  /// Duplicate arcs collapse. Throws InputError on out-of-range endpoints.
  DigraphBuilder& add_arc(Vertex from, Vertex to);
  std::size_t order() const { return n_; }
  Digraph build() const;

 private:
  std::size_t n_;
  std::size_t words_;
  Digraph::Rows rows_;
};

enum class Direction { Prey, Predator };

bool has_min_outdegree_one(const Digraph& d);

/// Vertices at the far end of a walk of length exactly `steps` starting at
/// `v` (prey) or ending at `v` (predator). steps == 0 gives {v}. Iterates
/// the one-step neighbourhood and jumps ahead once the sequence of
/// frontiers repeats, so very large step counts are cheap.
VertexSet step_neighbors(const Digraph& d, Vertex v, std::uint64_t steps,
                         Direction direction);

/// Boolean relational product: arc (u, w) iff u->v in `first` and v->w in
/// `second` for some v. Both operands must have the same order.
Digraph compose(const Digraph& first, const Digraph& second);

/// The m-step digraph, by repeated squaring. Throws InputError for m == 0.
Digraph m_step_digraph(const Digraph& d, std::uint64_t m);

VertexSet sources(const Digraph& d);

/// Components of the underlying graph, ordered by smallest member.
std::vector<VertexSet> weak_components(const Digraph& d);

bool is_weakly_connected(const Digraph& d);

struct InducedSubdigraph {
  Digraph digraph;
  /// to_parent[i] is the vertex of the original digraph that became i.
  std::vector<Vertex> to_parent;
};

/// Keeps the vertices of `keep` (relabelled in increasing order) and every
/// arc with both ends among them.
InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep);

}  // namespace mstep
