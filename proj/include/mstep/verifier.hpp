#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstep/digraph.hpp"

namespace mstep {

// Bounded empirical verification of the characterization results for
// triangle-free m-step competition graphs.
//
// Each catalog claim has one or more directions (biconditionals are split
// into "if" and "only_if"); every direction has a hypothesis and a
// conclusion over (D, m). A direction is verified within bounds when no
// instance satisfies the hypothesis while violating the conclusion.
//
// Claims drawn from the digraph stream scan every labeled digraph with
// minimum out-degree one on 1..n_max vertices (exhaustive) or a seeded
// sample of them. Two claims use a fixed family instead: lemma_2_2 scans
// the (k, l) construction over 1..K x 1..K where K = n_max, or 5 when
// n_max is 0; the "sound" half of thm_3_2 checks the partition
// representatives of every order 2..n_max.

enum class Mode { Exhaustive, Sampled };

inline constexpr std::size_t kDefaultOrderLimit = 4;   // above this needs `large`
inline constexpr std::size_t kMaxStoredInstances = 1000;
inline constexpr unsigned kDefaultFamilyBound = 5;

struct VerifyOptions {
  std::size_t n_max = kDefaultOrderLimit;
  std::vector<std::uint64_t> m_values;
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  unsigned workers = 1;
  /// Permits exhaustive runs with n_max > kDefaultOrderLimit.
  bool large = false;
};

using Params = std::map<std::string, std::int64_t>;

/// A serialized (D, m) instance. Used both for counterexamples and for
/// documented boundary instances that fall outside a direction's m-range.
struct Counterexample {
  std::string claim;
  std::string direction;
  std::uint64_t m = 0;  // 0 for m-independent claims
  Digraph digraph;
  Params params;        // direction-specific extras (later step, deleted arc, ...)
  std::uint64_t index = 0;  // stream index or sample number, for tracing
  std::string detail;
};

struct DirectionReport {
  std::string name;
  std::vector<std::uint64_t> m_values;  // empty for m-independent claims
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // first kMaxStoredInstances
  std::uint64_t boundary_count = 0;
  std::vector<Counterexample> boundary_instances;
  std::map<std::string, std::uint64_t> tallies;
};

struct VerificationReport {
  std::string claim;
  std::string statement;
  Mode mode = Mode::Exhaustive;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::vector<std::uint64_t> m_values;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t digraphs_examined = 0;
  std::vector<DirectionReport> directions;
  double elapsed_seconds = 0.0;

  bool verified() const;
  std::uint64_t counterexample_count() const;
  const DirectionReport& direction(std::string_view name) const;
};

struct DirectionInfo {
  std::string name;
  std::uint64_t min_m = 1;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  bool m_independent = false;
  std::vector<DirectionInfo> directions;
};

const std::vector<ClaimInfo>& claim_catalog();
const ClaimInfo& claim_info(std::string_view id);

/// Subset of `requested` the claim accepts (all of it for m-independent
/// claims, which ignore m).
std::vector<std::uint64_t> valid_m_values(std::string_view id,
                                          std::span<const std::uint64_t> requested);

/// Throws InputError for unknown ids, m values outside every direction's
/// range, or bounds that need `large`.
VerificationReport verify_claim(std::string_view id, const VerifyOptions& options);

/// Verifies several claims in one scan of the digraph space; per-digraph
/// facts are shared between claims.
std::vector<VerificationReport> verify_claims(std::span<const std::string> ids,
                                              const VerifyOptions& options);

/// Associative merge of partial reports of the same claim: counts add,
/// instance lists are concatenated, sorted and truncated.
VerificationReport merge_reports(VerificationReport a, const VerificationReport& b);

/// Re-evaluates the serialized instance; true iff the hypothesis holds and
/// the conclusion fails.
bool replay_counterexample(const Counterexample& entry);

std::string to_json(const Counterexample& entry);
/// Throws InputError on malformed input.
Counterexample counterexample_from_json(std::string_view json);

/// One JSON object, no trailing newline. Field names are stable.
std::string to_json_line(const VerificationReport& report);

/// Counterexamples (and boundary instances when `include_boundary`) from a
/// JSON line holding either a report or a single counterexample.
std::vector<Counterexample> counterexamples_from_json_line(std::string_view line,
                                                           bool include_boundary = false);

}  // namespace mstep
