#pragma once

// Claim catalog internals shared by the verifier and the replay path.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mstep/classifier.hpp"
#include "mstep/competition.hpp"
#include "mstep/partition.hpp"
#include "mstep/verifier.hpp"

namespace mstep::claims {

struct StepFacts {
  Digraph power;
  Graph competition;
  TriangleCheck triangles;
  std::vector<VertexSet> components;
  std::optional<StarDecompositionResult> stars;
};

/// Lazily computed facts about one digraph, shared across claims and m.
/// Not thread-safe; each worker owns its subjects.
class Subject {
 public:
  explicit Subject(Digraph d) : digraph_(std::move(d)) {}

  const Digraph& digraph() const { return digraph_; }
  std::size_t order() const { return digraph_.order(); }

  bool min_outdegree_one();
  const VertexSet& sources();
  std::size_t source_count() { return sources().size(); }
  const std::vector<VertexSet>& weak_components();
  bool weakly_connected() { return weak_components().size() == 1; }
  bool every_weak_component_has_source();
  const ClassificationReport& classification();
  bool star_generating() { return classification().star_generating; }
  bool every_component_star_generating();

  StepFacts& step(std::uint64_t m);
  const StarDecompositionResult& stars(std::uint64_t m);
  bool triangle_free(std::uint64_t m) { return step(m).triangles.triangle_free; }
  std::size_t component_count(std::uint64_t m) { return step(m).components.size(); }
  bool every_component_has_source(std::uint64_t m);

 private:
  Digraph digraph_;
  std::optional<bool> min_outdegree_one_;
  std::optional<VertexSet> sources_;
  std::optional<std::vector<VertexSet>> weak_components_;
  std::optional<bool> every_weak_component_has_source_;
  std::optional<ClassificationReport> classification_;
  std::optional<bool> every_component_star_generating_;
  std::map<std::uint64_t, StepFacts> steps_;
};

/// Per-worker scratch shared by evaluations (requested m values, cached
/// partition representatives).
class Context {
 public:
  explicit Context(std::vector<std::uint64_t> m_values) : m_values_(std::move(m_values)) {}

  const std::vector<std::uint64_t>& m_values() const { return m_values_; }

  struct Representatives {
    std::vector<Partition> partitions;
    std::vector<Digraph> digraphs;
    std::map<std::vector<Word>, std::size_t> forms;  // canonical form -> index
  };
  const Representatives& representatives(std::size_t n);

 private:
  std::vector<std::uint64_t> m_values_;
  std::map<std::size_t, Representatives> representatives_;
};

struct Outcome {
  bool hypothesis = false;
  bool conclusion = true;
  std::string detail;
  std::string tally;  // optional key counted in the direction's tallies
};

struct Direction {
  std::string name;
  std::uint64_t min_m = 1;
  /// m values in [boundary_from, min_m) are scanned and failures recorded
  /// as boundary instances instead of counterexamples.
  std::optional<std::uint64_t> boundary_from;
  /// Drawn from the claim's family rather than the digraph stream.
  bool family = false;
  std::function<std::vector<Params>(Subject&, std::uint64_t, Context&)> expand;
  std::function<Outcome(Subject&, std::uint64_t, const Params&, Context&)> evaluate;
};

struct FamilyMember {
  Digraph digraph;
  Params params;
};

struct Claim {
  std::string id;
  std::string statement;
  bool m_independent = false;
  std::vector<Direction> directions;
  std::function<std::vector<FamilyMember>(const VerifyOptions&)> family;

  bool has_stream_directions() const;
};

const std::vector<Claim>& catalog();
/// Throws InputError for unknown ids.
const Claim& find(std::string_view id);

}  // namespace mstep::claims
