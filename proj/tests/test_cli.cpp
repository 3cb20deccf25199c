#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "mstep/enumeration.hpp"
#include "mstep/io.hpp"
#include "oracle.hpp"

using namespace mstep;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mstep_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("compete writes the star and its verdicts") {
  TempDir tmp;
  const std::string input = tmp.file("fig1_d1.txt", to_edge_list(figure("fig1_D1").digraph));
  const auto dot = run({"compete", "--input", input, "--m", "3", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(oracle::valid_dot(dot.out));
  CHECK(dot.out.find("0 -- 1;") != std::string::npos);
  CHECK(dot.out.find("0 -- 2;") != std::string::npos);
  CHECK(dot.out.find("1 -- 2;") == std::string::npos);
  CHECK(dot.out.find("triangle_free: yes") != std::string::npos);

  const auto edges = run({"compete", "--input", input, "--m", "1152921504606846976"});
  CHECK(edges.code == 0);
  CHECK(parse_graph(edges.out) == Graph::from_edges(3, {{0, 1}, {0, 2}}));

  const std::string fig4 = tmp.file("fig4.txt", to_edge_list(figure("fig4_D").digraph));
  const auto tri = run({"compete", "--input", fig4, "--m", "2"});
  CHECK(tri.out.find("triangle_free: no, triangle 0 1 2") != std::string::npos);
  CHECK(tri.out.find("star_decomposition: failed") != std::string::npos);
}

TEST_CASE("input and usage errors exit with 1") {
  TempDir tmp;
  const std::string bad = tmp.file("bad.txt", "3\n0 7\n");
  CHECK(run({"compete", "--input", bad, "--m", "2"}).code == 1);
  CHECK(run({"compete", "--input", bad, "--m", "2"}).err.find("line 2") != std::string::npos);
  CHECK(run({"compete", "--input", (tmp.path / "missing").string(), "--m", "2"}).code == 1);
  CHECK(run({"compete", "--input", bad, "--m", "0"}).code == 1);
  CHECK(run({"compete", "--input", bad, "--m", "-3"}).code == 1);
  CHECK(run({"compete", "--m", "2"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"enumerate", "--n", "1"}).code == 1);
  CHECK(run({"generate"}).code == 1);
  CHECK(run({"generate", "--partition", "1,2"}).code == 1);
  CHECK(run({"generate", "--partition", "2", "--lemma-kl", "1", "1"}).code == 1);
  CHECK(run({"figures", "--name", "fig9"}).code == 1);
  CHECK(run({"verify", "--claim", "nope"}).code == 1);
  CHECK(run({"verify", "--claim", "lemma_3_5", "--m", "1"}).code == 1);
  CHECK(run({"verify", "--claim", "thm_1_2", "--n-max", "5", "--m", "2"}).code == 1);
  CHECK(run({"verify", "--claim", "thm_1_2", "--m", "1..x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--n", "4", "--count-only"}).out == "3\n");
  CHECK(run({"enumerate", "--n", "20", "--count-only"}).out == "490\n");
  const auto listed = run({"enumerate", "--n", "4"});
  CHECK(listed.code == 0);
  // Three blocks separated by blank lines, each a readable digraph.
  std::vector<std::string> blocks;
  std::string block;
  std::istringstream in(listed.out);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) {
      blocks.push_back(block);
      block.clear();
    } else {
      block += line + "\n";
    }
  }
  blocks.push_back(block);
  REQUIRE(blocks.size() == 3);
  std::size_t i = 0;
  for (const Digraph& d : enumerate_single_source_star_generating(4)) {
    CHECK(parse_digraph(blocks[i++]) == d);
  }
}

TEST_CASE("generate round trips") {
  const auto kl = run({"generate", "--lemma-kl", "2", "3"});
  CHECK(kl.code == 0);
  CHECK(parse_digraph(kl.out) == lemma_kl_digraph(2, 3));
  CHECK(parse_digraph(kl.out).order() == 6);

  const auto part = run({"generate", "--partition", "3,1"});
  CHECK(parse_digraph(part.out) == star_generating_from_partition(Partition({3, 1})));

  const auto dot = run({"generate", "--lemma-kl", "2", "3", "--format", "dot"});
  CHECK(oracle::valid_dot(dot.out));
  CHECK(dot.out.find("[label=\"w3\"]") != std::string::npos);
}

TEST_CASE("figures") {
  const auto all = run({"figures"});
  CHECK(all.code == 0);
  for (const auto& [name, f] : figure_digraphs()) CHECK(all.out.find("# " + name) != std::string::npos);
  const auto one = run({"figures", "--name", "fig2_D2"});
  CHECK(parse_digraph(one.out) == figure("fig2_D2").digraph);
  CHECK(one.out.find("# label 0 v") != std::string::npos);
  const auto dot = run({"figures", "--name", "fig4_D", "--format", "dot"});
  CHECK(oracle::valid_dot(dot.out));
  CHECK(dot.out.find("[label=\"v2\"]") != std::string::npos);
}

TEST_CASE("classify") {
  TempDir tmp;
  const std::string input = tmp.file("d.txt", to_edge_list(figure("fig4_D").digraph));
  const auto json = run({"classify", "--input", input});
  CHECK(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["star_generating"] == false);
  const auto text = run({"classify", "--input", input, "--format", "text"});
  CHECK(text.out.find("star_generating: no") != std::string::npos);
  const auto parts = run({"classify", "--input", input, "--components"});
  CHECK(nlohmann::json::parse(parts.out)["members"] == "{0,1,2}");
}

TEST_CASE("output files are written whole") {
  TempDir tmp;
  const std::string out = (tmp.path / "out.dot").string();
  CHECK(run({"figures", "--name", "fig1_D1", "--format", "dot", "--output", out}).code == 0);
  CHECK(oracle::valid_dot(slurp(out)));
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
  CHECK(run({"figures", "--output", (tmp.path / "no" / "dir.txt").string()}).code == 1);
}

TEST_CASE("verify writes JSON lines and replays") {
  TempDir tmp;
  const std::string report = (tmp.path / "report.jsonl").string();
  const auto first = run({"verify", "--claim", "thm_1_3,lemma_2_6", "--n-max", "3", "--m", "1..3",
                          "--output", report});
  CHECK(first.code == 0);
  CHECK(first.err.find("thm_1_3: verified") != std::string::npos);
  const auto second = run({"verify", "--claim", "prop_3_3", "--n-max", "3", "--m", "2", "--output",
                           report, "--workers", "2"});
  CHECK(second.code == 0);
  std::istringstream lines(slurp(report));
  std::vector<std::string> ids;
  for (std::string line; std::getline(lines, line);) {
    ids.push_back(nlohmann::json::parse(line)["claim"]);
  }
  CHECK(ids == std::vector<std::string>{"thm_1_3", "lemma_2_6", "prop_3_3"});

  const auto none = run({"verify", "--replay", report});
  CHECK(none.code == 0);
  CHECK(none.out.find("0 of 0 entries reproduced") != std::string::npos);
  const auto boundary = run({"verify", "--replay", report, "--include-boundary"});
  CHECK(boundary.code == 2);
  CHECK(boundary.out.find("not reproduced") == std::string::npos);

  const std::string forged = tmp.file(
      "forged.jsonl", R"({"claim":"thm_1_2","direction":"only_if","m":2,"digraph":"3\n0 1\n0 2\n1 1\n2 2\n"})"
                      "\n");
  const auto f = run({"verify", "--replay", forged});
  CHECK(f.code == 0);
  CHECK(f.out.find("not reproduced") != std::string::npos);
  CHECK(run({"verify", "--replay", tmp.file("junk.jsonl", "{oops\n")}).code == 1);
}

TEST_CASE("verify with default m and all claims") {
  const auto r = run({"verify", "--claim", "all", "--n-max", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["verified"] == true);
    ++count;
  }
  CHECK(count == 18);

  const auto sampled = run({"verify", "--claim", "thm_1_2", "--mode", "sampled", "--n-max", "6",
                            "--samples", "500", "--seed", "4", "--m", "2,3"});
  CHECK(sampled.code == 0);
  CHECK(nlohmann::json::parse(sampled.out)["samples"] == 500);
}
