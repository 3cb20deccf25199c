#pragma once

#include <cstddef>
#include <vector>

#include "mstep/digraph.hpp"

namespace mstep {

inline constexpr std::size_t kMaxCanonicalOrder = 8;

/// Lexicographically smallest out-row mask tuple over all relabellings.
/// Brute force over n! permutations; n <= kMaxCanonicalOrder.
std::vector<Word> canonical_form(const Digraph& d);

bool are_isomorphic(const Digraph& a, const Digraph& b);

/// Relabels vertex v as perm[v].
Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm);

}  // namespace mstep
