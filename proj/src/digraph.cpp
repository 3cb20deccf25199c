#include "mstep/digraph.hpp"

#include <map>
#include <optional>
#include <string>

#include "mstep/error.hpp"

namespace mstep {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  }
}

}  // namespace

Digraph::Digraph(std::size_t n, Rows out)
    : n_(n), words_(words_for(n)), out_(std::move(out)), in_(out_.size(), 0) {
  for (Vertex u = 0; u < n_; ++u) {
    bits::for_each(out_row(u), [&](Vertex v) {
      bits::set(std::span<Word>(in_.data() + v * words_, words_), u);
    });
  }
}

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  DigraphBuilder builder(n);
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw InputError("arc (" + std::to_string(a.from) + ", " +
                       std::to_string(a.to) + ") out of range for order " +
                       std::to_string(n));
    }
    builder.add_arc(a.from, a.to);
  }
  return builder.build();
}

Digraph Digraph::from_arcs(
    std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) {
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (const auto& [u, v] : arcs) list.push_back({u, v});
  return from_arcs(n, list);
}

Digraph Digraph::from_rows(std::size_t n, std::span<const Word> rows) {
  if (n == 0) throw InputError("digraph order must be positive");
  const std::size_t words = words_for(n);
  if (rows.size() != n * words) {
    throw InputError("row buffer has wrong size for order " + std::to_string(n));
  }
  const std::size_t tail = n % kWordBits;
  if (tail != 0) {
    const Word mask = ~((Word{1} << tail) - 1);
    for (std::size_t u = 0; u < n; ++u) {
      if (rows[u * words + words - 1] & mask) {
        throw InputError("row " + std::to_string(u) +
                         " has a neighbour outside 0.." + std::to_string(n - 1));
      }
    }
  }
  return Digraph(n, Rows(rows.begin(), rows.end()));
}

VertexSet Digraph::out_neighbors(Vertex v) const {
  check_vertex(n_, v);
  return VertexSet::from_words(n_, out_row(v));
}

VertexSet Digraph::in_neighbors(Vertex v) const {
  check_vertex(n_, v);
  return VertexSet::from_words(n_, in_row(v));
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  return from < n_ && to < n_ && bits::test(out_row(from), to);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u) {
    bits::for_each(out_row(u), [&](Vertex v) { out.push_back({u, v}); });
  }
  return out;
}

DigraphBuilder::DigraphBuilder(std::size_t n)
    : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {
  if (n == 0) throw InputError("digraph order must be positive");
}

DigraphBuilder& DigraphBuilder::add_arc(Vertex from, Vertex to) {
  if (from >= n_ || to >= n_) {
    throw InputError("arc (" + std::to_string(from) + ", " + std::to_string(to) +
                     ") out of range for order " + std::to_string(n_));
  }
  bits::set(std::span<Word>(rows_.data() + from * words_, words_), to);
  return *this;
}

Digraph DigraphBuilder::build() const { return Digraph::from_rows(n_, bits::view(rows_)); }

bool has_min_outdegree_one(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!bits::any(d.out_row(v))) return false;
  }
  return true;
}

VertexSet step_neighbors(const Digraph& d, Vertex v, std::uint64_t steps,
                         Direction direction) {
  check_vertex(d.order(), v);
  const std::size_t n = d.order();
  auto advance = [&](const VertexSet& frontier) {
    VertexSet next(n);
    auto words = next.mutable_words();
    frontier.for_each([&](Vertex u) {
      auto row = direction == Direction::Prey ? d.out_row(u) : d.in_row(u);
      for (std::size_t i = 0; i < words.size(); ++i) words[i] |= row[i];
    });
    return next;
  };

  VertexSet frontier(n, {v});
  std::map<VertexSet, std::uint64_t> seen;
  for (std::uint64_t i = 0; i < steps; ++i) {
    auto [it, inserted] = seen.emplace(frontier, i);
    if (!inserted) {
      // Frontier at step i equals the one at step it->second: periodic from
      // here on.
      const std::uint64_t period = i - it->second;
      std::uint64_t remaining = (steps - i) % period;
      while (remaining-- > 0) frontier = advance(frontier);
      return frontier;
    }
    frontier = advance(frontier);
  }
  return frontier;
}

Digraph compose(const Digraph& first, const Digraph& second) {
  if (first.order() != second.order()) {
    throw InputError("cannot compose digraphs of different order");
  }
  const std::size_t n = first.order();
  const std::size_t words = first.words_per_row();
  Digraph::Rows rows(n * words, 0);
  for (Vertex u = 0; u < n; ++u) {
    Word* dst = rows.data() + u * words;
    bits::for_each(first.out_row(u), [&](Vertex v) {
      auto src = second.out_row(v);
      for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
    });
  }
  return Digraph::from_rows(n, bits::view(rows));
}

Digraph m_step_digraph(const Digraph& d, std::uint64_t m) {
  if (m == 0) throw InputError("step count m must be positive");
  std::optional<Digraph> result;
  Digraph base = d;
  while (true) {
    if (m & 1U) result = result ? compose(*result, base) : base;
    m >>= 1U;
    if (m == 0) break;
    base = compose(base, base);
  }
  return *result;
}

VertexSet sources(const Digraph& d) {
  VertexSet out(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!bits::any(d.in_row(v))) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> weak_components(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<VertexSet> components;
  VertexSet unvisited = VertexSet::full(n);
  while (auto start = unvisited.first()) {
    VertexSet component(n, {*start});
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next(n);
      auto words = next.mutable_words();
      frontier.for_each([&](Vertex u) {
        auto out = d.out_row(u);
        auto in = d.in_row(u);
        for (std::size_t i = 0; i < words.size(); ++i) words[i] |= out[i] | in[i];
      });
      next -= component;
      component |= next;
      frontier = std::move(next);
    }
    unvisited -= component;
    components.push_back(std::move(component));
  }
  return components;
}

bool is_weakly_connected(const Digraph& d) {
  return weak_components(d).size() == 1;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep) {
  if (keep.universe() != d.order()) {
    throw InputError("vertex set universe does not match digraph order");
  }
  std::vector<Vertex> to_parent = keep.members();
  if (to_parent.empty()) {
    throw InputError("induced subdigraph needs at least one vertex");
  }
  std::vector<Vertex> to_child(d.order(), 0);
  for (Vertex i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = i;

  DigraphBuilder builder(to_parent.size());
  for (Vertex i = 0; i < to_parent.size(); ++i) {
    bits::for_each(d.out_row(to_parent[i]), [&](Vertex v) {
      if (keep.contains(v)) builder.add_arc(i, to_child[v]);
    });
  }
  return {builder.build(), std::move(to_parent)};
}

}  // namespace mstep
