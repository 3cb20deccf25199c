#include "mstep/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mstep/error.hpp"

namespace mstep {

std::vector<Word> canonical_form(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kMaxCanonicalOrder) {
    throw InputError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                     " vertices");
  }
  std::vector<Word> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = d.out_row(v)[0];

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Word> best;
  std::vector<Word> candidate(n);
  do {
    // perm maps new label -> old vertex.
    for (std::size_t i = 0; i < n; ++i) {
      Word row = 0;
      const Word old_row = rows[perm[i]];
      for (std::size_t j = 0; j < n; ++j) {
        if ((old_row >> perm[j]) & 1U) row |= Word{1} << j;
      }
      candidate[i] = row;
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  return a.order() == b.order() && a.arc_count() == b.arc_count() &&
         canonical_form(a) == canonical_form(b);
}

Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm) {
  std::vector<bool> used(d.order(), false);
  if (perm.size() != d.order()) throw InputError("permutation size does not match order");
  for (Vertex v : perm) {
    if (v >= d.order() || used[v]) throw InputError("relabelling is not a permutation");
    used[v] = true;
  }
  DigraphBuilder builder(d.order());
  for (const Arc& a : d.arcs()) builder.add_arc(perm[a.from], perm[a.to]);
  return builder.build();
}

}  // namespace mstep
