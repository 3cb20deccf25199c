#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "mstep/enumeration.hpp"
#include "mstep/error.hpp"
#include "mstep/io.hpp"
#include "mstep/verifier.hpp"
#include "oracle.hpp"

using namespace mstep;

namespace {

VerifyOptions exhaustive(std::size_t n_max, std::vector<std::uint64_t> m) {
  VerifyOptions o;
  o.n_max = n_max;
  o.m_values = std::move(m);
  return o;
}

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("catalog") {
  const std::vector<std::string> expected{
      "thm_1_1", "thm_1_2", "thm_1_3", "prop_2_1", "lemma_2_2", "prop_2_3",
      "lemma_2_4", "prop_2_5", "lemma_2_6", "thm_2_7", "lemma_3_1", "thm_3_2",
      "prop_3_3", "lemma_3_4", "lemma_3_5", "lemma_3_6", "prop_3_7", "cor_3_8"};
  std::vector<std::string> ids;
  for (const auto& c : claim_catalog()) {
    ids.push_back(c.id);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.directions.empty());
  }
  CHECK(ids == expected);
  const auto& t = claim_info("thm_1_2");
  REQUIRE(t.directions.size() == 2);
  CHECK(t.directions[0].name == "if");
  CHECK(t.directions[0].min_m == 2);
  CHECK(t.directions[1].name == "only_if");
  CHECK(t.directions[1].min_m == 1);
  CHECK(claim_info("lemma_2_6").m_independent);
}

TEST_CASE("option validation") {
  CHECK_THROWS_WITH_AS(verify_claim("thm_9_9", exhaustive(3, {1})), doctest::Contains("unknown claim"),
                       InputError);
  CHECK_THROWS_WITH_AS(verify_claim("lemma_3_5", exhaustive(3, {1, 2})),
                       doctest::Contains("m >= 2"), InputError);
  CHECK_THROWS_AS(verify_claim("thm_1_2", exhaustive(3, {0, 2})), InputError);
  CHECK_THROWS_AS(verify_claim("thm_1_2", exhaustive(3, {})), InputError);
  CHECK_THROWS_WITH_AS(verify_claim("thm_1_2", exhaustive(5, {2})), doctest::Contains("large"),
                       InputError);
  CHECK_THROWS_AS(verify_claim("thm_1_2", exhaustive(1, {2})), InputError);
  VerifyOptions o = exhaustive(3, {2});
  o.workers = 0;
  CHECK_THROWS_AS(verify_claim("thm_1_2", o), InputError);
  o = exhaustive(9, {2});
  o.large = true;
  CHECK_THROWS_AS(verify_claim("thm_1_2", o), InputError);
  // m-independent claims ignore m.
  CHECK(verify_claim("lemma_2_6", exhaustive(3, {})).verified());

  const std::vector<std::uint64_t> requested{1, 2, 3};
  CHECK(valid_m_values("lemma_3_5", requested) == std::vector<std::uint64_t>{2, 3});
  CHECK(valid_m_values("thm_1_2", requested) == requested);
  CHECK(valid_m_values("lemma_2_6", requested) == requested);
}

TEST_CASE("directions carry their own m ranges") {
  const auto r = verify_claim("thm_1_2", exhaustive(4, range(1, 6)));
  CHECK(r.verified());
  CHECK(r.direction("if").m_values == range(2, 6));
  CHECK(r.direction("only_if").m_values == range(1, 6));
  CHECK(r.digraphs_examined == 1 + 9 + 343 + 50625);
  CHECK(r.direction("if").instances == 5 * r.digraphs_examined);
  CHECK(r.direction("only_if").instances == 6 * r.digraphs_examined);
  CHECK(r.direction("if").hypothesis_hits > 0);
  CHECK_THROWS_AS(r.direction("sideways"), InputError);
}

TEST_CASE("isomorphism classes of single-source star-generating digraphs") {
  const auto r = verify_claim("thm_3_2", exhaustive(4, {}));
  CHECK(r.verified());
  const auto& tallies = r.direction("complete").tallies;
  std::size_t classes_at_4 = 0;
  for (const auto& [key, count] : tallies) {
    if (key.rfind("n=4 ", 0) == 0) ++classes_at_4;
  }
  CHECK(classes_at_4 == oracle::partition_counts(3)[3]);
  CHECK(r.direction("sound").hypothesis_hits == 1 + 2 + 3);
}

TEST_CASE("lemma family at the default bound") {
  const auto r = verify_claim("lemma_2_2", exhaustive(0, range(1, 10)));
  CHECK(r.verified());
  CHECK(r.direction("main").hypothesis_hits == 250);
  CHECK(r.digraphs_examined == 25);
}

TEST_CASE("the one-step exception is a boundary instance") {
  const auto r = verify_claim("thm_1_3", exhaustive(3, {1, 2}));
  CHECK(r.verified());
  const auto& only_if = r.direction("only_if");
  CHECK(only_if.m_values == std::vector<std::uint64_t>{2});
  CHECK(only_if.boundary_count > 0);
  const Digraph fig4 = figure("fig4_D").digraph;
  const auto it = std::find_if(only_if.boundary_instances.begin(), only_if.boundary_instances.end(),
                               [&](const Counterexample& c) { return c.digraph == fig4; });
  REQUIRE(it != only_if.boundary_instances.end());
  CHECK(it->m == 1);
  CHECK(replay_counterexample(*it));
  for (const auto& c : only_if.boundary_instances) CHECK(c.m == 1);
}

TEST_CASE("replay") {
  Counterexample fig4{"thm_1_3", "only_if", 1, figure("fig4_D").digraph, {}, 0, ""};
  CHECK(replay_counterexample(fig4));
  fig4.m = 2;  // C^2 has a triangle, hypothesis fails
  CHECK_FALSE(replay_counterexample(fig4));

  Counterexample forged{"thm_1_2", "only_if", 3, figure("fig1_D1").digraph, {}, 0, ""};
  CHECK_FALSE(replay_counterexample(forged));
  forged.direction = "nope";
  CHECK_THROWS_AS(replay_counterexample(forged), InputError);
  forged.direction = "only_if";
  forged.m = 0;
  CHECK_THROWS_AS(replay_counterexample(forged), InputError);
  forged.claim = "nope";
  CHECK_THROWS_AS(replay_counterexample(forged), InputError);
}

TEST_CASE("counterexample JSON round trip") {
  const Counterexample c{"prop_2_1", "main", 3, lemma_kl_digraph(2, 2), {{"j", 5}}, 17, "x"};
  const Counterexample back = counterexample_from_json(to_json(c));
  CHECK(back.claim == c.claim);
  CHECK(back.direction == c.direction);
  CHECK(back.m == c.m);
  CHECK(back.digraph == c.digraph);
  CHECK(back.params == c.params);
  CHECK(back.index == c.index);
  CHECK(back.detail == c.detail);
  const auto j = nlohmann::json::parse(to_json(c));
  CHECK(j["n"] == 5);
  CHECK(j["digraph"] == to_edge_list(c.digraph));

  CHECK_THROWS_AS(counterexample_from_json("{"), InputError);
  CHECK_THROWS_AS(counterexample_from_json("{\"claim\":\"x\"}"), InputError);
  CHECK_THROWS_AS(counterexample_from_json("[1]"), InputError);
  CHECK_THROWS_AS(counterexample_from_json(
                      R"({"claim":"x","direction":"y","m":1,"digraph":"2\n0 5\n"})"),
                  InputError);
}

TEST_CASE("report JSON line") {
  const auto r = verify_claim("thm_1_3", exhaustive(3, {1, 2}));
  const std::string line = to_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  const auto j = nlohmann::json::parse(line);
  for (const char* key : {"claim", "statement", "mode", "n_min", "n_max", "m_values", "seed",
                          "samples", "digraphs_examined", "verified", "counterexample_count",
                          "directions", "elapsed_seconds"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["verified"] == true);
  CHECK(counterexamples_from_json_line(line).empty());
  const auto boundary = counterexamples_from_json_line(line, true);
  CHECK(boundary.size() == r.direction("only_if").boundary_instances.size());
  for (const auto& c : boundary) CHECK(replay_counterexample(c));
}

TEST_CASE("sampled mode is reproducible across runs and worker counts") {
  VerifyOptions o;
  o.mode = Mode::Sampled;
  o.n_max = 7;
  o.m_values = {1, 2, 3};
  o.samples = 3000;
  o.seed = 99;
  const std::vector<std::string> ids{"thm_1_3", "lemma_3_6", "prop_2_1"};
  const auto a = verify_claims(ids, o);
  o.workers = 3;
  const auto b = verify_claims(ids, o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].verified());
    auto strip = [](VerificationReport r) {
      r.elapsed_seconds = 0;
      return to_json_line(r);
    };
    CHECK(strip(a[i]) == strip(b[i]));
    CHECK(a[i].digraphs_examined == 3000);
  }
  o.seed = 100;
  o.workers = 1;
  const auto c = verify_claims(ids, o);
  // A different seed draws different digraphs.
  CHECK(c[0].direction("only_if").hypothesis_hits != a[0].direction("only_if").hypothesis_hits);
}

TEST_CASE("shared scan equals separate scans") {
  const auto m = range(2, 4);
  const std::vector<std::string> ids{"cor_3_8", "prop_2_3", "lemma_2_6"};
  const auto together = verify_claims(ids, exhaustive(3, m));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto alone = verify_claim(ids[i], exhaustive(3, m));
    alone.elapsed_seconds = together[i].elapsed_seconds;
    CHECK(to_json_line(alone) == to_json_line(together[i]));
  }
}

TEST_CASE("merging is order independent and truncates") {
  auto report_with = [](std::vector<std::uint64_t> indices) {
    VerificationReport r;
    r.claim = "prop_2_1";
    r.digraphs_examined = indices.size();
    DirectionReport d;
    d.name = "main";
    for (auto i : indices) {
      d.counterexamples.push_back(
          {"prop_2_1", "main", 1, Digraph::from_arcs(1, {{0, 0}}), {}, i, ""});
      ++d.counterexample_count;
      ++d.tallies["t"];
    }
    r.directions.push_back(d);
    return r;
  };
  std::vector<std::uint64_t> xs, ys, zs;
  for (std::uint64_t i = 0; i < 700; ++i) (i % 3 == 0 ? xs : i % 3 == 1 ? ys : zs).push_back(i * 7 % 701);
  const auto a = report_with(xs), b = report_with(ys), c = report_with(zs);
  const auto left = merge_reports(merge_reports(a, b), c);
  const auto right = merge_reports(a, merge_reports(c, b));
  CHECK(to_json_line(left) == to_json_line(right));
  CHECK(left.counterexample_count() == 700);
  CHECK(left.directions[0].tallies.at("t") == 700);

  const auto big = merge_reports(merge_reports(left, left), report_with(range(1000, 1399)));
  CHECK(big.counterexample_count() == 1800);
  CHECK(big.directions[0].counterexamples.size() == kMaxStoredInstances);
  CHECK(std::is_sorted(big.directions[0].counterexamples.begin(),
                       big.directions[0].counterexamples.end(),
                       [](const auto& x, const auto& y) { return x.index < y.index; }));
  CHECK_FALSE(big.verified());

  VerificationReport other = a;
  other.claim = "thm_1_2";
  CHECK_THROWS_AS(merge_reports(a, other), InputError);
}
