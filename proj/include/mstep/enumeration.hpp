#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include "mstep/digraph.hpp"
#include "mstep/error.hpp"
#include "mstep/partition.hpp"

namespace mstep {

/// Vertex 0 is the unique source with an arc to every other vertex; the
/// parts become directed cycles on consecutive vertices starting at 1, in
/// part order (i -> i+1 -> ... -> i+len-1 -> i).
Digraph star_generating_from_partition(const Partition& p);

/// One representative per isomorphism class of star-generating digraphs of
/// order n with exactly one source, one per partition of n-1. n >= 2.
inline auto enumerate_single_source_star_generating(unsigned n) {
  if (n < 2) throw InputError("enumeration needs n >= 2");
  return Partitions(n - 1) | std::views::transform([](const Partition& p) {
           return star_generating_from_partition(p);
         });
}

/// Weakly connected digraph with k sources whose m-step competition graph
/// has l components for every m. Vertices: v1..vk = 0..k-1, u = k,
/// w1..wl = k+1..k+l.
Digraph lemma_kl_digraph(unsigned k, unsigned l);
std::vector<std::string> lemma_kl_labels(unsigned k, unsigned l);

struct FigureDigraph {
  Digraph digraph;
  std::vector<std::string> labels;
  std::string caption;
};

/// fig1_D1, fig1_D2, fig2_D1, fig2_D2, fig2_D3, fig4_D.
const std::map<std::string, FigureDigraph>& figure_digraphs();
const FigureDigraph& figure(const std::string& name);

/// Every labeled digraph on n vertices whose out-neighbourhoods are all
/// nonempty, in lexicographic order of the tuple of out-neighbourhood
/// bitmasks (vertex 0 most significant). The index space [0, (2^n-1)^n)
/// can be cut into contiguous ranges consumed independently.
class DigraphStream {
 public:
  using Filter = std::function<bool(const Digraph&)>;

  static constexpr std::size_t kMaxOrder = 8;

  /// (2^n - 1)^n. Throws InputError for n == 0 or n > kMaxOrder.
  static std::uint64_t space_size(std::size_t n);
  /// The digraph at position `index` of the full stream.
  static Digraph at(std::size_t n, std::uint64_t index);

  explicit DigraphStream(std::size_t n, Filter filter = {});
  DigraphStream(std::size_t n, std::uint64_t first, std::uint64_t last, Filter filter = {});

  /// Next digraph passing the filter, or nullopt at the end of the range.
  std::optional<Digraph> next();
  /// Index of the digraph most recently returned by next().
  std::uint64_t index() const { return current_ - 1; }
  std::size_t order() const { return n_; }

 private:
  void load_digits(std::uint64_t index);

  std::size_t n_;
  std::uint64_t current_;
  std::uint64_t last_;
  Filter filter_;
  std::vector<Word> masks_;
};

DigraphStream all_digraphs(std::size_t n, DigraphStream::Filter filter = {});

}  // namespace mstep
