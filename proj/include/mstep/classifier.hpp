#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mstep/digraph.hpp"

namespace mstep {

/// Concrete evidence that a condition fails. `kind` is a stable tag:
///
///   disconnected     [x, y]     x and y lie in different weak components
///   no_source        []         every vertex has a predator
///   source_prey      [v, w]     source v has prey w whose predator count != 2
///   common_prey      [x, y, z]  sources x and y share prey z
///   prey_count       [u]        non-source u does not have exactly one prey
///   predator_count   [u]        non-source u does not have exactly two predators
///   predator_mix     [u, p, q]  u's predators p, q are not one source + one non-source
///   zero_outdegree   [u]        u has no prey
struct Witness {
  std::string kind;
  std::vector<Vertex> vertices;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;  // set iff !holds
};

/// Star-generating conditions of a digraph. `star_generating` is the
/// conjunction of weak connectivity and S1..S3. `min_outdegree_one` is
/// informational: non-source vertices are covered by S3, and a source
/// without prey can only occur in the one-vertex digraph.
struct ClassificationReport {
  Verdict weakly_connected;
  Verdict s1;  // a source exists; each prey of a source has exactly two predators
  Verdict s2;  // no two sources share a prey
  Verdict s3;  // each non-source: one prey, two predators (one source, one not)
  Verdict min_outdegree_one;
  bool star_generating = false;

  /// Stable-field JSON: weakly_connected, s1, s2, s3, star_generating,
  /// min_outdegree_one, witnesses.
  std::string to_json() const;
  std::string to_text() const;
};

ClassificationReport classify_star_generating(const Digraph& d);

struct ComponentClassification {
  VertexSet members;
  /// Witness vertices are reported in the labels of the full digraph.
  ClassificationReport report;
};

std::vector<ComponentClassification> classify_components(const Digraph& d);

/// True iff every weak component is star-generating. Cheaper than
/// classify_components when only the verdict is needed.
bool every_weak_component_star_generating(const Digraph& d);

struct CycleDecomposition {
  bool is_cycle_union = false;
  /// Each cycle starts at its smallest vertex; cycles ordered by that vertex.
  std::vector<std::vector<Vertex>> cycles;
};

/// Succeeds iff every vertex has exactly one prey and exactly one predator.
/// Loops count as cycles of length one.
CycleDecomposition is_disjoint_cycle_union(const Digraph& d);

/// Each vertex has exactly one prey and no two distinct vertices share one.
bool check_no_common_prey_functional(const Digraph& d);

}  // namespace mstep
