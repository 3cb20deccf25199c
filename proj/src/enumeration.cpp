#include "mstep/enumeration.hpp"

#include "mstep/error.hpp"

namespace mstep {

Digraph star_generating_from_partition(const Partition& p) {
  DigraphBuilder builder(p.total() + 1);
  for (Vertex v = 1; v <= p.total(); ++v) builder.add_arc(0, v);
  Vertex start = 1;
  for (unsigned len : p.parts()) {
    for (Vertex i = 0; i < len; ++i) {
      builder.add_arc(start + i, start + (i + 1) % len);
    }
    start += len;
  }
  return builder.build();
}

Digraph lemma_kl_digraph(unsigned k, unsigned l) {
  if (k == 0 || l == 0) throw InputError("lemma (k, l) digraph needs k >= 1 and l >= 1");
  const Vertex u = k;
  const Vertex w1 = k + 1;
  DigraphBuilder builder(k + 1 + l);
  for (Vertex i = 0; i < k; ++i) builder.add_arc(i, u);
  builder.add_arc(u, u);
  builder.add_arc(k - 1, w1);
  // l == 1 gives the loop on w1.
  for (Vertex j = 0; j < l; ++j) builder.add_arc(w1 + j, w1 + (j + 1) % l);
  return builder.build();
}

std::vector<std::string> lemma_kl_labels(unsigned k, unsigned l) {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= k; ++i) labels.push_back("v" + std::to_string(i));
  labels.push_back("u");
  for (unsigned j = 1; j <= l; ++j) labels.push_back("w" + std::to_string(j));
  return labels;
}

const std::map<std::string, FigureDigraph>& figure_digraphs() {
  static const std::map<std::string, FigureDigraph> figures = [] {
    std::map<std::string, FigureDigraph> m;
    const std::vector<std::string> abd = {"a", "b", "d"};
    const std::vector<std::string> vbcd = {"v", "b", "c", "d"};
    m.emplace("fig1_D1", FigureDigraph{Digraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 1}, {2, 2}}),
                                       abd, "star-generating, three vertices, two loops"});
    m.emplace("fig1_D2", FigureDigraph{Digraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}}),
                                       abd, "star-generating, three vertices, 2-cycle"});
    m.emplace("fig2_D1",
              FigureDigraph{Digraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 2}, {3, 3}}),
                            vbcd, "partition 1+1+1"});
    m.emplace("fig2_D2",
              FigureDigraph{Digraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {2, 2}, {1, 3}, {3, 1}}),
                            vbcd, "partition 2+1"});
    m.emplace("fig2_D3",
              FigureDigraph{Digraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {2, 1}, {1, 3}, {3, 2}}),
                            vbcd, "partition 3"});
    m.emplace("fig4_D", FigureDigraph{Digraph::from_arcs(3, {{0, 1}, {1, 1}, {1, 2}, {2, 2}}),
                                      {"v1", "v2", "v3"},
                                      "connected triangle-free C^1, not star-generating"});
    return m;
  }();
  return figures;
}

const FigureDigraph& figure(const std::string& name) {
  const auto& figures = figure_digraphs();
  auto it = figures.find(name);
  if (it == figures.end()) throw InputError("unknown figure '" + name + "'");
  return it->second;
}

std::uint64_t DigraphStream::space_size(std::size_t n) {
  if (n == 0 || n > kMaxOrder) {
    throw InputError("digraph stream supports 1 <= n <= " + std::to_string(kMaxOrder));
  }
  const std::uint64_t base = (std::uint64_t{1} << n) - 1;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= base;
  return size;
}

Digraph DigraphStream::at(std::size_t n, std::uint64_t index) {
  DigraphStream s(n, index, index + 1);
  return *s.next();
}

DigraphStream::DigraphStream(std::size_t n, Filter filter)
    : DigraphStream(n, 0, space_size(n), std::move(filter)) {}

DigraphStream::DigraphStream(std::size_t n, std::uint64_t first, std::uint64_t last,
                             Filter filter)
    : n_(n), current_(first), last_(last), filter_(std::move(filter)), masks_(n, 1) {
  const std::uint64_t size = space_size(n);
  if (first > last || last > size) throw InputError("digraph stream range out of bounds");
  if (first < last) load_digits(first);
}

void DigraphStream::load_digits(std::uint64_t index) {
  const std::uint64_t base = (std::uint64_t{1} << n_) - 1;
  for (std::size_t v = n_; v-- > 0;) {
    masks_[v] = index % base + 1;
    index /= base;
  }
}

std::optional<Digraph> DigraphStream::next() {
  const Word max_mask = (Word{1} << n_) - 1;
  while (current_ < last_) {
    Digraph d = Digraph::from_rows(n_, masks_);
    ++current_;
    for (std::size_t v = n_; v-- > 0;) {
      if (masks_[v] < max_mask) {
        ++masks_[v];
        break;
      }
      masks_[v] = 1;
    }
    if (!filter_ || filter_(d)) return d;
  }
  return std::nullopt;
}

DigraphStream all_digraphs(std::size_t n, DigraphStream::Filter filter) {
  return DigraphStream(n, std::move(filter));
}

}  // namespace mstep
