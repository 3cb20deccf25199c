#include "claims.hpp"

#include <algorithm>
#include <set>

#include "mstep/enumeration.hpp"
#include "mstep/error.hpp"
#include "mstep/isomorphism.hpp"

namespace mstep::claims {

// ---------------------------------------------------------------------------
// Subject / Context

bool Subject::min_outdegree_one() {
  if (!min_outdegree_one_) min_outdegree_one_ = has_min_outdegree_one(digraph_);
  return *min_outdegree_one_;
}

const VertexSet& Subject::sources() {
  if (!sources_) sources_ = mstep::sources(digraph_);
  return *sources_;
}

const std::vector<VertexSet>& Subject::weak_components() {
  if (!weak_components_) weak_components_ = mstep::weak_components(digraph_);
  return *weak_components_;
}

bool Subject::every_weak_component_has_source() {
  if (!every_weak_component_has_source_) {
    const VertexSet& srcs = sources();
    const auto& comps = weak_components();
    every_weak_component_has_source_ = std::all_of(
        comps.begin(), comps.end(), [&](const VertexSet& c) { return c.intersects(srcs); });
  }
  return *every_weak_component_has_source_;
}

const ClassificationReport& Subject::classification() {
  if (!classification_) classification_ = classify_star_generating(digraph_);
  return *classification_;
}

bool Subject::every_component_star_generating() {
  if (!every_component_star_generating_) {
    every_component_star_generating_ =
        weakly_connected() ? star_generating() : every_weak_component_star_generating(digraph_);
  }
  return *every_component_star_generating_;
}

StepFacts& Subject::step(std::uint64_t m) {
  auto it = steps_.find(m);
  if (it == steps_.end()) {
    Digraph power = m_step_digraph(digraph_, m);
    Graph competition = common_prey_graph(power);
    TriangleCheck triangles = is_triangle_free(competition);
    std::vector<VertexSet> comps = components(competition);
    it = steps_
             .emplace(m, StepFacts{std::move(power), std::move(competition), std::move(triangles),
                                   std::move(comps), std::nullopt})
             .first;
  }
  return it->second;
}

const StarDecompositionResult& Subject::stars(std::uint64_t m) {
  StepFacts& facts = step(m);
  if (!facts.stars) facts.stars = star_decomposition(facts.competition, sources());
  return *facts.stars;
}

bool Subject::every_component_has_source(std::uint64_t m) {
  const VertexSet& srcs = sources();
  const auto& comps = step(m).components;
  return std::all_of(comps.begin(), comps.end(),
                     [&](const VertexSet& c) { return c.intersects(srcs); });
}

const Context::Representatives& Context::representatives(std::size_t n) {
  auto it = representatives_.find(n);
  if (it != representatives_.end()) return it->second;
  Representatives reps;
  for (const Partition& p : Partitions(static_cast<unsigned>(n - 1))) {
    reps.partitions.push_back(p);
    reps.digraphs.push_back(star_generating_from_partition(p));
    reps.forms.emplace(canonical_form(reps.digraphs.back()), reps.digraphs.size() - 1);
  }
  return representatives_.emplace(n, std::move(reps)).first->second;
}

bool Claim::has_stream_directions() const {
  return std::any_of(directions.begin(), directions.end(),
                     [](const Direction& d) { return !d.family; });
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  s.for_each([&](Vertex v) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  });
  return out + "}";
}

Outcome vacuous() { return {false, true, {}, {}}; }
Outcome holds() { return {true, true, {}, {}}; }
Outcome violated(std::string detail) { return {true, false, std::move(detail), {}}; }

std::vector<Params> single(Subject&, std::uint64_t, Context&) { return {Params{}}; }

std::optional<std::int64_t> param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) return std::nullopt;
  return it->second;
}

using Evaluate = std::function<Outcome(Subject&, std::uint64_t, const Params&, Context&)>;

// Every catalog result assumes minimum out-degree one.
Evaluate standing(Evaluate inner) {
  return [inner = std::move(inner)](Subject& s, std::uint64_t m, const Params& p, Context& ctx) {
    if (!s.min_outdegree_one()) return vacuous();
    return inner(s, m, p, ctx);
  };
}

Direction direction(std::string name, std::uint64_t min_m, Evaluate evaluate) {
  Direction d;
  d.name = std::move(name);
  d.min_m = min_m;
  d.expand = single;
  d.evaluate = standing(std::move(evaluate));
  return d;
}

// "C^m(D) is a disjoint union of nontrivial stars centered at sources".
std::optional<std::string> star_failure(Subject& s, std::uint64_t m) {
  const auto& result = s.stars(m);
  if (const auto* failure = std::get_if<StarFailure>(&result)) return failure->describe();
  return std::nullopt;
}

std::string triangle_string(const TriangleCheck& t) {
  const auto& w = *t.witness;
  return "triangle {" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + "}";
}

Claim prop_2_1() {
  Direction d = direction("main", 1, [](Subject& s, std::uint64_t m, const Params& p, Context&) {
    const auto j = param(p, "j");
    if (!j || *j <= 0 || static_cast<std::uint64_t>(*j) <= m) return vacuous();
    const Graph& earlier = s.step(m).competition;
    const Graph& later = s.step(static_cast<std::uint64_t>(*j)).competition;
    for (const Edge& e : earlier.edges()) {
      if (!later.has_edge(e.u, e.v)) {
        return violated("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} has a common prey at step " + std::to_string(m) + " but not at step " +
                        std::to_string(*j));
      }
    }
    return holds();
  });
  d.expand = [](Subject&, std::uint64_t m, Context& ctx) {
    std::set<std::uint64_t> later{m + 1};
    for (std::uint64_t v : ctx.m_values()) {
      if (v > m) later.insert(v);
    }
    std::vector<Params> out;
    for (std::uint64_t j : later) out.push_back({{"j", static_cast<std::int64_t>(j)}});
    return out;
  };
  return {"prop_2_1",
          "Two vertices with a common i-step prey have a common j-step prey for every j > i.",
          false,
          {std::move(d)},
          {}};
}

std::vector<VertexSet> lemma_kl_expected_components(unsigned k, unsigned l) {
  const std::size_t n = k + 1 + l;
  if (l == 1) return {VertexSet::full(n)};
  VertexSet main(n);
  for (Vertex v = 0; v <= k; ++v) main.insert(v);
  main.insert(k + l);  // w_l
  std::vector<VertexSet> out{main};
  for (Vertex j = 1; j < l; ++j) out.push_back(VertexSet(n, {k + j}));
  return out;
}

Claim lemma_2_2() {
  Direction d = direction("main", 1, [](Subject& s, std::uint64_t m, const Params& p, Context&) {
    const auto k = param(p, "k");
    const auto l = param(p, "l");
    if (!k || !l || *k < 1 || *l < 1) return vacuous();
    const auto ku = static_cast<unsigned>(*k);
    const auto lu = static_cast<unsigned>(*l);
    if (!(s.digraph() == lemma_kl_digraph(ku, lu))) return vacuous();
    VertexSet expected_sources(s.order());
    for (Vertex v = 0; v < ku; ++v) expected_sources.insert(v);
    if (!(s.sources() == expected_sources)) {
      return violated("sources are " + set_string(s.sources()));
    }
    if (!s.weakly_connected()) return violated("not weakly connected");
    const auto& comps = s.step(m).components;
    if (comps != lemma_kl_expected_components(ku, lu)) {
      std::string got;
      for (const auto& c : comps) got += set_string(c);
      return violated(std::to_string(comps.size()) + " components " + got);
    }
    return holds();
  });
  d.family = true;
  Claim c{"lemma_2_2",
          "The (k, l) construction is weakly connected with k sources, and its m-step "
          "competition graph has exactly l components for every m.",
          false,
          {std::move(d)},
          {}};
  c.family = [](const VerifyOptions& options) {
    const unsigned bound =
        options.n_max == 0 ? kDefaultFamilyBound : static_cast<unsigned>(options.n_max);
    std::vector<FamilyMember> out;
    for (unsigned k = 1; k <= bound; ++k) {
      for (unsigned l = 1; l <= bound; ++l) {
        out.push_back({lemma_kl_digraph(k, l), {{"k", k}, {"l", l}}});
      }
    }
    return out;
  };
  return c;
}

Claim prop_2_3() {
  return {"prop_2_3",
          "If C^m(D) is triangle-free, every vertex has at most two i-step predators for "
          "1 <= i <= m.",
          false,
          {direction("main", 1,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       if (!s.triangle_free(m)) return vacuous();
                       const Digraph& d = s.digraph();
                       Digraph power = d;
                       std::set<std::vector<Word>> seen;
                       for (std::uint64_t i = 1; i <= m; ++i) {
                         for (Vertex v = 0; v < d.order(); ++v) {
                           if (power.in_degree(v) > 2) {
                             return violated("vertex " + std::to_string(v) + " has " +
                                             std::to_string(power.in_degree(v)) + " " +
                                             std::to_string(i) + "-step predators");
                           }
                         }
                         const auto rows = power.out_rows();
                         // Later powers repeat ones already checked.
                         if (!seen.emplace(rows.begin(), rows.end()).second) break;
                         power = compose(power, d);
                       }
                       return holds();
                     })},
          {}};
}

bool lemma_2_4_hypothesis(Subject& s, std::uint64_t m) {
  return s.weakly_connected() && s.source_count() >= 1 && s.triangle_free(m);
}

Claim lemma_2_4() {
  Direction part1 =
      direction("part1", 1, [](Subject& s, std::uint64_t m, const Params&, Context&) {
        if (!lemma_2_4_hypothesis(s, m)) return vacuous();
        if (s.component_count(m) < s.source_count()) {
          return violated(std::to_string(s.component_count(m)) + " components < " +
                          std::to_string(s.source_count()) + " sources");
        }
        return holds();
      });
  Direction part2 =
      direction("part2", 1, [](Subject& s, std::uint64_t m, const Params&, Context&) {
        if (!lemma_2_4_hypothesis(s, m) || s.component_count(m) != s.source_count()) {
          return vacuous();
        }
        const Digraph& power = s.step(m).power;
        const VertexSet& srcs = s.sources();
        for (Vertex x = 0; x < power.order(); ++x) {
          if (srcs.contains(x)) continue;
          if (power.in_degree(x) != 2) {
            return violated("non-source " + std::to_string(x) + " has " +
                            std::to_string(power.in_degree(x)) + " m-step predators");
          }
          const VertexSet preds_x = power.in_neighbors(x);
          for (Vertex y = 0; y < power.order(); ++y) {
            if (y == x) continue;
            if ((preds_x & power.in_neighbors(y)).size() > 1) {
              return violated("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                              " share two m-step predators");
            }
          }
        }
        return holds();
      });
  return {"lemma_2_4",
          "Weakly connected D with k >= 1 sources and triangle-free C^m(D) with l components: "
          "l >= k (part1); if l = k, every non-source has exactly two m-step predators and "
          "shares at most one with any other vertex (part2).",
          false,
          {std::move(part1), std::move(part2)},
          {}};
}

// Weakly connected, triangle-free C^m(D), as many components as sources.
bool balanced_connected(Subject& s, std::uint64_t m) {
  return s.weakly_connected() && s.triangle_free(m) && s.component_count(m) == s.source_count();
}

Claim prop_2_5() {
  return {"prop_2_5",
          "m >= 2, D weakly connected, C^m(D) triangle-free with as many components as "
          "sources: a vertex sharing a prey with a source has exactly one prey and is adjacent "
          "in C^m(D) to that source only.",
          false,
          {direction("main", 2,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       if (!balanced_connected(s, m)) return vacuous();
                       const Digraph& d = s.digraph();
                       const Graph& g = s.step(m).competition;
                       std::optional<std::string> failure;
                       s.sources().for_each([&](Vertex v) {
                         for (Vertex u = 0; u < d.order() && !failure; ++u) {
                           if (u == v || !bits::intersects(d.out_row(u), d.out_row(v))) continue;
                           if (d.out_degree(u) != 1) {
                             failure = "vertex " + std::to_string(u) + " shares a prey with source " +
                                       std::to_string(v) + " but has " +
                                       std::to_string(d.out_degree(u)) + " prey";
                           } else if (!(g.neighbors(u) == VertexSet(d.order(), {v}))) {
                             failure = "vertex " + std::to_string(u) + " has neighbours " +
                                       set_string(g.neighbors(u)) + " in C^m, expected {" +
                                       std::to_string(v) + "}";
                           }
                         }
                       });
                       return failure ? violated(*failure) : holds();
                     })},
          {}};
}

std::optional<std::string> cycle_union_failure(const Digraph& d) {
  const CycleDecomposition dec = is_disjoint_cycle_union(d);
  if (!dec.is_cycle_union) return "not a vertex-disjoint union of directed cycles";
  std::vector<int> seen(d.order(), 0);
  for (const auto& cycle : dec.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      ++seen[cycle[i]];
      if (!d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) {
        return "reported cycle uses a missing arc";
      }
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    return "reported cycles do not partition the vertices";
  }
  return std::nullopt;
}

Claim lemma_2_6() {
  return {"lemma_2_6",
          "If every vertex has exactly one prey and no two vertices share a prey, D is a "
          "vertex-disjoint union of directed cycles.",
          true,
          {direction("main", 1,
                     [](Subject& s, std::uint64_t, const Params&, Context&) {
                       if (!check_no_common_prey_functional(s.digraph())) return vacuous();
                       auto failure = cycle_union_failure(s.digraph());
                       return failure ? violated(*failure) : holds();
                     })},
          {}};
}

Claim thm_2_7() {
  return {"thm_2_7",
          "m >= 2, D weakly connected, C^m(D) triangle-free with as many components as "
          "sources: every component of C^m(D) is a nontrivial star centered at a source and D "
          "is star-generating.",
          false,
          {direction("main", 2,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       if (!balanced_connected(s, m)) return vacuous();
                       if (auto failure = star_failure(s, m)) return violated(*failure);
                       if (!s.star_generating()) return violated("D is not star-generating");
                       return holds();
                     })},
          {}};
}

Claim lemma_3_1() {
  return {"lemma_3_1",
          "Removing the sources of a star-generating digraph leaves a vertex-disjoint union "
          "of directed cycles.",
          true,
          {direction("main", 1,
                     [](Subject& s, std::uint64_t, const Params&, Context&) {
                       if (!s.star_generating()) return vacuous();
                       const VertexSet rest = VertexSet::full(s.order()) - s.sources();
                       if (rest.empty()) return holds();
                       auto failure =
                           cycle_union_failure(induced_subdigraph(s.digraph(), rest).digraph);
                       return failure ? violated(*failure) : holds();
                     })},
          {}};
}

Claim thm_3_2() {
  Direction complete =
      direction("complete", 1, [](Subject& s, std::uint64_t, const Params&, Context& ctx) {
        const std::size_t n = s.order();
        if (n < 2 || n > kMaxCanonicalOrder) return vacuous();
        if (!s.star_generating() || s.source_count() != 1) return vacuous();
        const auto& reps = ctx.representatives(n);
        auto it = reps.forms.find(canonical_form(s.digraph()));
        if (it == reps.forms.end()) {
          return violated("single-source star-generating digraph isomorphic to no partition "
                          "representative");
        }
        Outcome o = holds();
        o.tally = "n=" + std::to_string(n) + " class=" + reps.partitions[it->second].to_string();
        return o;
      });
  Direction sound =
      direction("sound", 1, [](Subject& s, std::uint64_t, const Params& p, Context& ctx) {
        const auto n = param(p, "n");
        const auto index = param(p, "index");
        if (!n || !index || *n < 2 || *n > static_cast<std::int64_t>(kMaxCanonicalOrder) ||
            static_cast<std::size_t>(*n) != s.order()) {
          return vacuous();
        }
        const auto& reps = ctx.representatives(s.order());
        if (*index < 0 || static_cast<std::size_t>(*index) >= reps.digraphs.size() ||
            !(reps.digraphs[*index] == s.digraph())) {
          return vacuous();
        }
        if (!s.star_generating()) return violated("representative is not star-generating");
        if (s.source_count() != 1) return violated("representative has more than one source");
        const std::size_t first = reps.forms.at(canonical_form(s.digraph()));
        if (first != static_cast<std::size_t>(*index)) {
          return violated("representative is isomorphic to representative " +
                          std::to_string(first));
        }
        return holds();
      });
  sound.family = true;
  Claim c{"thm_3_2",
          "Star-generating digraphs of order n with exactly one source are, up to "
          "isomorphism, exactly the partition representatives of n - 1 (complete: every one "
          "found is a representative; sound: representatives qualify and are pairwise "
          "non-isomorphic).",
          true,
          {std::move(complete), std::move(sound)},
          {}};
  c.family = [](const VerifyOptions& options) {
    std::vector<FamilyMember> out;
    const std::size_t top = std::min(options.n_max, kMaxCanonicalOrder);
    for (std::size_t n = 2; n <= top; ++n) {
      std::int64_t index = 0;
      for (const Partition& p : Partitions(static_cast<unsigned>(n - 1))) {
        out.push_back({star_generating_from_partition(p),
                       {{"n", static_cast<std::int64_t>(n)}, {"index", index++}}});
      }
    }
    return out;
  };
  return c;
}

Claim prop_3_3() {
  return {"prop_3_3",
          "For a star-generating D with k sources and every m >= 1, C^m(D) is a disjoint "
          "union of k nontrivial stars centered at sources.",
          false,
          {direction("main", 1,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       if (!s.star_generating()) return vacuous();
                       if (auto failure = star_failure(s, m)) return violated(*failure);
                       const auto& stars = std::get<StarDecomposition>(s.stars(m)).stars;
                       if (stars.size() != s.source_count()) {
                         return violated(std::to_string(stars.size()) + " stars for " +
                                         std::to_string(s.source_count()) + " sources");
                       }
                       return holds();
                     })},
          {}};
}

Claim lemma_3_4() {
  // Subdigraphs one deletion away from D; by transitivity of the subgraph
  // relation these cover every subdigraph.
  Direction d = direction("main", 1, [](Subject& s, std::uint64_t m, const Params& p, Context&) {
    const Digraph& d = s.digraph();
    const std::size_t n = d.order();
    std::optional<Digraph> sub;
    std::vector<Vertex> to_parent;
    if (auto v = param(p, "drop_vertex")) {
      if (*v < 0 || static_cast<std::size_t>(*v) >= n || n < 2) return vacuous();
      VertexSet keep = VertexSet::full(n);
      keep.erase(static_cast<Vertex>(*v));
      auto induced = induced_subdigraph(d, keep);
      sub = std::move(induced.digraph);
      to_parent = std::move(induced.to_parent);
    } else {
      const auto from = param(p, "drop_from");
      const auto to = param(p, "drop_to");
      if (!from || !to || *from < 0 || *to < 0 ||
          !d.has_arc(static_cast<Vertex>(*from), static_cast<Vertex>(*to))) {
        return vacuous();
      }
      DigraphBuilder builder(n);
      for (const Arc& a : d.arcs()) {
        if (a.from != *from || a.to != *to) builder.add_arc(a.from, a.to);
      }
      sub = builder.build();
      for (Vertex v = 0; v < n; ++v) to_parent.push_back(v);
    }
    const Graph& full = s.step(m).competition;
    for (const Edge& e : competition_graph(*sub, m).edges()) {
      const Vertex u = to_parent[e.u];
      const Vertex v = to_parent[e.v];
      if (!full.has_edge(u, v)) {
        return violated("edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} of the subdigraph's competition graph is missing");
      }
    }
    return holds();
  });
  d.expand = [](Subject& s, std::uint64_t, Context&) {
    std::vector<Params> out;
    for (const Arc& a : s.digraph().arcs()) {
      out.push_back({{"drop_from", a.from}, {"drop_to", a.to}});
    }
    if (s.order() >= 2) {
      for (Vertex v = 0; v < s.order(); ++v) out.push_back({{"drop_vertex", v}});
    }
    return out;
  };
  return {"lemma_3_4",
          "The m-step competition graph of a subdigraph is a subgraph of the m-step "
          "competition graph of the digraph.",
          false,
          {std::move(d)},
          {}};
}

Claim lemma_3_5() {
  return {"lemma_3_5",
          "Every weak component has a source and C^m(D) is triangle-free (m >= 2): the "
          "number of sources is at most the number of components of C^m(D).",
          false,
          {direction("main", 2,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       if (!s.every_weak_component_has_source() || !s.triangle_free(m)) {
                         return vacuous();
                       }
                       if (s.source_count() > s.component_count(m)) {
                         return violated(std::to_string(s.source_count()) + " sources > " +
                                         std::to_string(s.component_count(m)) + " components");
                       }
                       return holds();
                     })},
          {}};
}

bool balanced(Subject& s, std::uint64_t m) {
  return s.triangle_free(m) && s.component_count(m) == s.source_count();
}

Claim lemma_3_6() {
  Direction if_dir = direction("if", 2, [](Subject& s, std::uint64_t m, const Params&, Context&) {
    if (!s.every_weak_component_has_source() || !balanced(s, m)) return vacuous();
    if (!s.every_component_star_generating()) {
      return violated("some weak component is not star-generating");
    }
    return holds();
  });
  Direction only_if =
      direction("only_if", 1, [](Subject& s, std::uint64_t m, const Params&, Context&) {
        if (!s.every_weak_component_has_source() || !s.every_component_star_generating()) {
          return vacuous();
        }
        if (!s.triangle_free(m)) return violated(triangle_string(s.step(m).triangles));
        if (s.component_count(m) != s.source_count()) {
          return violated(std::to_string(s.component_count(m)) + " components for " +
                          std::to_string(s.source_count()) + " sources");
        }
        return holds();
      });
  return {"lemma_3_6",
          "Every weak component has a source: all weak components are star-generating iff "
          "C^m(D) is triangle-free with as many components as sources (if: m >= 2, only if: "
          "m >= 1).",
          false,
          {std::move(if_dir), std::move(only_if)},
          {}};
}

Claim prop_3_7() {
  Direction if_dir = direction("if", 2, [](Subject& s, std::uint64_t m, const Params&, Context&) {
    if (!s.every_weak_component_has_source() || !balanced(s, m)) return vacuous();
    if (!s.every_component_has_source(m)) {
      return violated("a component of C^m(D) contains no source");
    }
    return holds();
  });
  Direction only_if =
      direction("only_if", 1, [](Subject& s, std::uint64_t m, const Params&, Context&) {
        if (!s.every_weak_component_has_source() || !s.triangle_free(m) ||
            !s.every_component_has_source(m)) {
          return vacuous();
        }
        if (s.component_count(m) != s.source_count()) {
          return violated(std::to_string(s.component_count(m)) + " components for " +
                          std::to_string(s.source_count()) + " sources");
        }
        return holds();
      });
  return {"prop_3_7",
          "Every weak component has a source and C^m(D) is triangle-free: each component of "
          "C^m(D) contains a source iff the number of sources equals the number of "
          "components (if: m >= 2, only if: m >= 1).",
          false,
          {std::move(if_dir), std::move(only_if)},
          {}};
}

Claim cor_3_8() {
  return {"cor_3_8",
          "Every weak component has a source, C^m(D) is triangle-free and each of its "
          "components contains a source (m >= 2): every weak component is star-generating.",
          false,
          {direction("main", 2,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       if (!s.every_weak_component_has_source() || !s.triangle_free(m) ||
                           !s.every_component_has_source(m)) {
                         return vacuous();
                       }
                       if (!s.every_component_star_generating()) {
                         return violated("some weak component is not star-generating");
                       }
                       return holds();
                     })},
          {}};
}

Claim thm_1_2() {
  Direction if_dir = direction("if", 2, [](Subject& s, std::uint64_t m, const Params&, Context&) {
    if (!s.every_weak_component_has_source() || star_failure(s, m)) return vacuous();
    if (!s.every_component_star_generating()) {
      return violated("some weak component is not star-generating");
    }
    return holds();
  });
  Direction only_if =
      direction("only_if", 1, [](Subject& s, std::uint64_t m, const Params&, Context&) {
        if (!s.every_weak_component_has_source() || !s.every_component_star_generating()) {
          return vacuous();
        }
        if (auto failure = star_failure(s, m)) return violated(*failure);
        return holds();
      });
  return {"thm_1_2",
          "Every weak component has a source: all weak components are star-generating iff "
          "every component of C^m(D) is a nontrivial star centered at a source (if: m >= 2, "
          "only if: m >= 1).",
          false,
          {std::move(if_dir), std::move(only_if)},
          {}};
}

Claim thm_1_3() {
  Direction only_if =
      direction("only_if", 2, [](Subject& s, std::uint64_t m, const Params&, Context&) {
        if (s.source_count() == 0 || s.component_count(m) != 1 || !s.triangle_free(m)) {
          return vacuous();
        }
        if (!s.star_generating()) return violated("D is not star-generating");
        if (s.source_count() != 1) {
          return violated("D has " + std::to_string(s.source_count()) + " sources");
        }
        return holds();
      });
  // At m = 1 the converse can fail (fig4_D); those instances are recorded
  // as boundary instances.
  only_if.boundary_from = 1;
  Direction if_dir = direction("if", 1, [](Subject& s, std::uint64_t m, const Params&, Context&) {
    if (s.source_count() != 1 || !s.star_generating()) return vacuous();
    if (s.component_count(m) != 1) return violated("C^m(D) is disconnected");
    if (!s.triangle_free(m)) return violated(triangle_string(s.step(m).triangles));
    return holds();
  });
  return {"thm_1_3",
          "D has a source: C^m(D) is connected and triangle-free iff D is star-generating "
          "with exactly one source (only if: m >= 2, if: m >= 1).",
          false,
          {std::move(only_if), std::move(if_dir)},
          {}};
}

Claim thm_1_1() {
  return {"thm_1_1",
          "For m >= n >= 2, a connected triangle-free m-step competition graph on n vertices "
          "is a star.",
          false,
          {direction("main", 2,
                     [](Subject& s, std::uint64_t m, const Params&, Context&) {
                       const std::size_t n = s.order();
                       if (n < 2 || m < n || s.component_count(m) != 1 || !s.triangle_free(m)) {
                         return vacuous();
                       }
                       const Graph& g = s.step(m).competition;
                       if (!succeeded(star_decomposition(g, VertexSet::full(n)))) {
                         return violated("connected triangle-free C^m(D) is not a star");
                       }
                       return holds();
                     })},
          {}};
}

}  // namespace

const std::vector<Claim>& catalog() {
  static const std::vector<Claim> claims = {
      thm_1_1(),   thm_1_2(),   thm_1_3(),   prop_2_1(),  lemma_2_2(), prop_2_3(),
      lemma_2_4(), prop_2_5(),  lemma_2_6(), thm_2_7(),   lemma_3_1(), thm_3_2(),
      prop_3_3(),  lemma_3_4(), lemma_3_5(), lemma_3_6(), prop_3_7(),  cor_3_8()};
  return claims;
}

const Claim& find(std::string_view id) {
  for (const Claim& c : catalog()) {
    if (c.id == id) return c;
  }
  std::string known;
  for (const Claim& c : catalog()) known += (known.empty() ? "" : ", ") + c.id;
  throw InputError("unknown claim '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace mstep::claims
