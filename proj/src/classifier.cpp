#include "mstep/classifier.hpp"

#include <sstream>

#include "json.hpp"

namespace mstep {

namespace {

Verdict fail(std::string kind, std::vector<Vertex> vertices) {
  return {false, Witness{std::move(kind), std::move(vertices)}};
}

Verdict check_s1(const Digraph& d, const VertexSet& srcs) {
  if (srcs.empty()) return fail("no_source", {});
  std::optional<Verdict> verdict;
  srcs.for_each([&](Vertex v) {
    if (verdict) return;
    bits::for_each(d.out_row(v), [&](Vertex w) {
      if (!verdict && d.in_degree(w) != 2) verdict = fail("source_prey", {v, w});
    });
  });
  return verdict.value_or(Verdict{});
}

Verdict check_s2(const Digraph& d, const VertexSet& srcs) {
  const auto members = srcs.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      auto common = d.out_neighbors(members[i]) & d.out_neighbors(members[j]);
      if (auto z = common.first()) return fail("common_prey", {members[i], members[j], *z});
    }
  }
  return {};
}

Verdict check_s3(const Digraph& d, const VertexSet& srcs) {
  for (Vertex u = 0; u < d.order(); ++u) {
    if (srcs.contains(u)) continue;
    if (d.out_degree(u) != 1) return fail("prey_count", {u});
    if (d.in_degree(u) != 2) return fail("predator_count", {u});
    const auto preds = d.in_neighbors(u).members();
    const bool first_is_source = srcs.contains(preds[0]);
    const bool second_is_source = srcs.contains(preds[1]);
    if (first_is_source == second_is_source) {
      return fail("predator_mix", {u, preds[0], preds[1]});
    }
  }
  return {};
}

nlohmann::json verdict_witness_json(const Verdict& v) {
  return {{"kind", v.witness->kind}, {"vertices", v.witness->vertices}};
}

void remap(Verdict& verdict, const std::vector<Vertex>& to_parent) {
  if (!verdict.witness) return;
  for (Vertex& v : verdict.witness->vertices) v = to_parent[v];
}

}  // namespace

ClassificationReport classify_star_generating(const Digraph& d) {
  ClassificationReport report;
  const auto comps = weak_components(d);
  if (comps.size() > 1) {
    report.weakly_connected = fail("disconnected", {*comps[0].first(), *comps[1].first()});
  }
  const VertexSet srcs = sources(d);
  report.s1 = check_s1(d, srcs);
  report.s2 = check_s2(d, srcs);
  report.s3 = check_s3(d, srcs);
  for (Vertex u = 0; u < d.order(); ++u) {
    if (d.out_degree(u) == 0) {
      report.min_outdegree_one = fail("zero_outdegree", {u});
      break;
    }
  }
  report.star_generating = report.weakly_connected.holds && report.s1.holds &&
                           report.s2.holds && report.s3.holds;
  return report;
}

std::vector<ComponentClassification> classify_components(const Digraph& d) {
  std::vector<ComponentClassification> out;
  for (VertexSet& members : weak_components(d)) {
    auto sub = induced_subdigraph(d, members);
    ClassificationReport report = classify_star_generating(sub.digraph);
    for (Verdict* v : {&report.weakly_connected, &report.s1, &report.s2, &report.s3,
                       &report.min_outdegree_one}) {
      remap(*v, sub.to_parent);
    }
    out.push_back({std::move(members), std::move(report)});
  }
  return out;
}

bool every_weak_component_star_generating(const Digraph& d) {
  for (const VertexSet& members : weak_components(d)) {
    if (!classify_star_generating(induced_subdigraph(d, members).digraph).star_generating) {
      return false;
    }
  }
  return true;
}

std::string ClassificationReport::to_json() const {
  nlohmann::json witnesses = nlohmann::json::object();
  const std::pair<const char*, const Verdict*> fields[] = {
      {"weakly_connected", &weakly_connected},
      {"s1", &s1},
      {"s2", &s2},
      {"s3", &s3},
      {"min_outdegree_one", &min_outdegree_one}};
  nlohmann::json j;
  for (const auto& [name, verdict] : fields) {
    j[name] = verdict->holds;
    if (!verdict->holds) witnesses[name] = verdict_witness_json(*verdict);
  }
  j["star_generating"] = star_generating;
  j["witnesses"] = std::move(witnesses);
  return j.dump();
}

std::string ClassificationReport::to_text() const {
  std::ostringstream os;
  auto line = [&](const char* name, const Verdict& v) {
    os << name << ": " << (v.holds ? "yes" : "no");
    if (v.witness) {
      os << " (" << v.witness->kind;
      for (Vertex x : v.witness->vertices) os << ' ' << x;
      os << ')';
    }
    os << '\n';
  };
  line("weakly_connected", weakly_connected);
  line("s1", s1);
  line("s2", s2);
  line("s3", s3);
  line("min_outdegree_one", min_outdegree_one);
  os << "star_generating: " << (star_generating ? "yes" : "no") << '\n';
  return os.str();
}

CycleDecomposition is_disjoint_cycle_union(const Digraph& d) {
  const std::size_t n = d.order();
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return {};
  }
  CycleDecomposition out{true, {}};
  std::vector<bool> visited(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<Vertex> cycle;
    Vertex v = start;
    do {
      visited[v] = true;
      cycle.push_back(v);
      v = *d.out_neighbors(v).first();
    } while (v != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool check_no_common_prey_functional(const Digraph& d) {
  const std::size_t n = d.order();
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) != 1) return false;
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (bits::intersects(d.out_row(x), d.out_row(y))) return false;
    }
  }
  return true;
}

}  // namespace mstep
