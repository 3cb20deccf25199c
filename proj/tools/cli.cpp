#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mstep/classifier.hpp"
#include "mstep/competition.hpp"
#include "mstep/enumeration.hpp"
#include "mstep/error.hpp"
#include "mstep/io.hpp"
#include "mstep/verifier.hpp"

namespace mstep::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kMaxExpandedM = 100000;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomically(const std::string& path, const std::string& text) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw InputError("cannot write '" + path + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError("cannot write '" + path + "': " + ec.message());
  }
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
  } else {
    write_atomically(output, text);
  }
}

std::string comment_prefix(const std::string& format) { return format == "dot" ? "// " : "# "; }

std::string digraph_text(const Digraph& d, const std::string& format,
                         std::span<const std::string> labels = {}) {
  if (format == "dot") return to_dot(d, labels);
  std::string text;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    text += "# label " + std::to_string(v) + " " + labels[v] + "\n";
  }
  return text + to_edge_list(d);
}

std::string set_text(const VertexSet& s) {
  std::string text = "{";
  s.for_each([&](Vertex v) {
    if (text.size() > 1) text += ",";
    text += std::to_string(v);
  });
  return text + "}";
}

// "1..6,8" -> {1,...,6,8}
std::vector<std::uint64_t> parse_m_list(const std::string& list) {
  std::vector<std::uint64_t> out;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("invalid m value '" + s + "'");
    }
    try {
      return static_cast<std::uint64_t>(std::stoull(s));
    } catch (const std::out_of_range&) {
      throw InputError("m value '" + s + "' is too large");
    }
  };
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const std::uint64_t lo = number(item.substr(0, dots));
    const std::uint64_t hi = number(item.substr(dots + 2));
    if (hi < lo || hi - lo >= kMaxExpandedM) throw InputError("invalid m range '" + item + "'");
    for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(m);
  }
  if (out.empty()) throw InputError("empty m list");
  if (std::count(out.begin(), out.end(), 0)) throw InputError("step count m must be positive");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<unsigned> parse_parts(const std::string& list) {
  std::vector<unsigned> parts;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 6) {
      throw InputError("invalid partition part '" + item + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return parts;
}

std::vector<std::string> split_claims(const std::string& list) {
  if (list == "all") {
    std::vector<std::string> ids;
    for (const auto& info : claim_catalog()) ids.push_back(info.id);
    return ids;
  }
  std::vector<std::string> ids;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    claim_info(item);  // validates
    ids.push_back(item);
  }
  if (ids.empty()) throw InputError("no claims requested");
  return ids;
}

// ---------------------------------------------------------------------------

struct CompeteArgs {
  std::string input;
  std::uint64_t m = 1;
  std::string format = "edges";
  std::string output;
};

int compete(const CompeteArgs& a, std::ostream& out) {
  if (a.m == 0) throw InputError("step count m must be positive");
  const Digraph d = parse_digraph(read_file(a.input));
  const Graph g = competition_graph(d, a.m);
  const TriangleCheck triangles = is_triangle_free(g);
  const StarDecompositionResult stars = star_decomposition(g, sources(d));

  const std::string c = comment_prefix(a.format);
  std::string text = c + "m-step competition graph, m = " + std::to_string(a.m) + "\n";
  if (triangles.triangle_free) {
    text += c + "triangle_free: yes\n";
  } else {
    const auto& w = *triangles.witness;
    text += c + "triangle_free: no, triangle " + std::to_string(w[0]) + " " +
            std::to_string(w[1]) + " " + std::to_string(w[2]) + "\n";
  }
  if (const auto* dec = std::get_if<StarDecomposition>(&stars)) {
    text += c + "star_decomposition: " + std::to_string(dec->stars.size()) +
            " star(s) centered at sources\n";
    for (const Star& s : dec->stars) {
      text += c + "star center " + std::to_string(s.center) + " leaves " + set_text(s.leaves) +
              "\n";
    }
  } else {
    text += c + "star_decomposition: failed, " + std::get<StarFailure>(stars).describe() + "\n";
  }
  text += a.format == "dot" ? to_dot(g, {}, "C") : to_edge_list(g);
  emit(text, a.output, out);
  return 0;
}

struct ClassifyArgs {
  std::string input;
  std::string format = "json";
  bool components = false;
};

int classify(const ClassifyArgs& a, std::ostream& out) {
  const Digraph d = parse_digraph(read_file(a.input));
  if (!a.components) {
    const auto report = classify_star_generating(d);
    out << (a.format == "json" ? report.to_json() : report.to_text()) << "\n";
    return 0;
  }
  for (const auto& c : classify_components(d)) {
    if (a.format == "json") {
      out << "{\"members\":\"" << set_text(c.members) << "\",\"report\":" << c.report.to_json()
          << "}\n";
    } else {
      out << "component " << set_text(c.members) << "\n" << c.report.to_text() << "\n";
    }
  }
  return 0;
}

struct EnumerateArgs {
  unsigned n = 0;
  bool count_only = false;
  std::string format = "edges";
  std::string output;
};

int enumerate(const EnumerateArgs& a, std::ostream& out) {
  if (a.n < 2) throw InputError("enumerate needs n >= 2");
  if (a.count_only) {
    std::size_t count = 0;
    for (const Digraph& d : enumerate_single_source_star_generating(a.n)) {
      (void)d;
      ++count;
    }
    emit(std::to_string(count) + "\n", a.output, out);
    return 0;
  }
  std::string text;
  std::size_t count = 0;
  const std::string c = comment_prefix(a.format);
  for (const Partition& p : Partitions(a.n - 1)) {
    ++count;
    if (count > 1) text += "\n";
    text += c + "partition " + p.to_string() + "\n";
    text += digraph_text(star_generating_from_partition(p), a.format);
  }
  emit(text, a.output, out);
  return 0;
}

struct GenerateArgs {
  std::string partition;
  std::vector<unsigned> lemma_kl;
  std::string format = "edges";
  std::string output;
};

int generate(const GenerateArgs& a, std::ostream& out) {
  std::string text;
  if (!a.partition.empty()) {
    const Partition p(parse_parts(a.partition));
    text = comment_prefix(a.format) + "partition " + p.to_string() + "\n" +
           digraph_text(star_generating_from_partition(p), a.format);
  } else {
    const unsigned k = a.lemma_kl.at(0);
    const unsigned l = a.lemma_kl.at(1);
    if (k == 0 || l == 0) throw InputError("lemma-kl needs k, l >= 1");
    const auto labels = lemma_kl_labels(k, l);
    text = comment_prefix(a.format) + "lemma construction k = " + std::to_string(k) +
           ", l = " + std::to_string(l) + "\n" + digraph_text(lemma_kl_digraph(k, l), a.format, labels);
  }
  emit(text, a.output, out);
  return 0;
}

struct FiguresArgs {
  std::string name;
  std::string format = "edges";
  std::string output;
};

int figures(const FiguresArgs& a, std::ostream& out) {
  std::string text;
  const std::string c = comment_prefix(a.format);
  auto add = [&](const std::string& name, const FigureDigraph& f) {
    if (!text.empty()) text += "\n";
    text += c + name + ": " + f.caption + "\n";
    text += digraph_text(f.digraph, a.format, f.labels);
  };
  if (!a.name.empty()) {
    add(a.name, figure(a.name));
  } else {
    for (const auto& [name, f] : figure_digraphs()) add(name, f);
  }
  emit(text, a.output, out);
  return 0;
}

struct VerifyArgs {
  std::string claims;
  std::size_t n_max = kDefaultOrderLimit;
  std::string m;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
  unsigned workers = 1;
  bool large = false;
  std::string output;
  std::string replay;
  bool include_boundary = false;
};

std::string summary(const VerificationReport& r) {
  std::string text = r.claim + ": " + (r.verified() ? "verified" : "COUNTEREXAMPLES") +
                     " (digraphs " + std::to_string(r.digraphs_examined);
  for (const auto& d : r.directions) {
    text += ", " + d.name + " " + std::to_string(d.hypothesis_hits) + "/" +
            std::to_string(d.instances) + " hits";
    if (d.counterexample_count) text += " " + std::to_string(d.counterexample_count) + " failing";
    if (d.boundary_count) text += " " + std::to_string(d.boundary_count) + " boundary";
  }
  std::ostringstream secs;
  secs.precision(3);
  secs << std::fixed << r.elapsed_seconds;
  return text + ", " + secs.str() + " s)";
}

int replay(const VerifyArgs& a, std::ostream& out) {
  const std::string text = read_file(a.replay);
  std::stringstream in(text);
  std::size_t total = 0;
  std::size_t reproduced = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    for (const auto& entry : counterexamples_from_json_line(line, a.include_boundary)) {
      const bool still = replay_counterexample(entry);
      ++total;
      reproduced += still;
      out << entry.claim << " " << entry.direction << " m=" << entry.m << " n="
          << entry.digraph.order() << ": " << (still ? "reproduced" : "not reproduced") << "\n";
    }
  }
  out << reproduced << " of " << total << " entries reproduced\n";
  return reproduced > 0 ? 2 : 0;
}

int verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.replay.empty()) return replay(a, out);
  if (a.claims.empty()) throw InputError("verify needs --claim or --replay");

  VerifyOptions options;
  options.n_max = a.n_max;
  options.mode = a.mode == "sampled" ? Mode::Sampled : Mode::Exhaustive;
  options.seed = a.seed;
  options.samples = a.samples;
  options.workers = a.workers;
  options.large = a.large;

  const std::vector<std::string> ids = split_claims(a.claims);
  const bool explicit_m = !a.m.empty();
  const std::vector<std::uint64_t> requested = parse_m_list(explicit_m ? a.m : "1..6");

  // Claims sharing an m set run in one scan. With an explicit --m on named
  // claims the verifier rejects out-of-range values; otherwise each claim
  // keeps the values it accepts.
  std::map<std::vector<std::uint64_t>, std::vector<std::string>> groups;
  std::vector<std::string> order;
  for (const std::string& id : ids) {
    std::vector<std::uint64_t> m = requested;
    if (!explicit_m || a.claims == "all") m = valid_m_values(id, requested);
    if (m.empty()) {
      err << "skipping " << id << ": no applicable m value\n";
      continue;
    }
    if (claim_info(id).m_independent) m = {};
    groups[m].push_back(id);
  }

  std::map<std::string, VerificationReport> by_id;
  for (const auto& [m, group] : groups) {
    options.m_values = m;
    for (auto& r : verify_claims(group, options)) by_id.emplace(r.claim, std::move(r));
  }

  std::string lines;
  bool failed = false;
  for (const std::string& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) continue;
    lines += to_json_line(it->second) + "\n";
    failed = failed || !it->second.verified();
    err << summary(it->second) << "\n";
  }
  if (a.output.empty()) {
    out << lines;
  } else {
    std::string existing;
    if (fs::exists(a.output)) existing = read_file(a.output);
    write_atomically(a.output, existing + lines);
  }
  return failed ? 2 : 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-step competition graph toolkit", "mstep"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"edges", "dot"});

  CompeteArgs compete_args;
  auto* compete_cmd = app.add_subcommand("compete", "m-step competition graph of a digraph");
  compete_cmd->add_option("--input", compete_args.input, "digraph edge-list file ('-' for stdin)")
      ->required();
  compete_cmd->add_option("--m", compete_args.m, "step count")->required();
  compete_cmd->add_option("--format", compete_args.format)->check(formats);
  compete_cmd->add_option("--output", compete_args.output);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "star-generating conditions of a digraph");
  classify_cmd->add_option("--input", classify_args.input)->required();
  classify_cmd->add_option("--format", classify_args.format)
      ->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_flag("--components", classify_args.components,
                         "classify every weak component");

  EnumerateArgs enumerate_args;
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "single-source star-generating digraphs of order n");
  enumerate_cmd->add_option("--n", enumerate_args.n)->required()->check(CLI::Range(2u, 60u));
  enumerate_cmd->add_flag("--count-only", enumerate_args.count_only);
  enumerate_cmd->add_option("--format", enumerate_args.format)->check(formats);
  enumerate_cmd->add_option("--output", enumerate_args.output);

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "partition or lemma (k, l) digraph");
  auto* source = generate_cmd->add_option_group("source");
  source->add_option("--partition", generate_args.partition, "comma-separated nonincreasing parts");
  source->add_option("--lemma-kl", generate_args.lemma_kl, "K L")->expected(2);
  source->require_option(1);
  generate_cmd->add_option("--format", generate_args.format)->check(formats);
  generate_cmd->add_option("--output", generate_args.output);

  FiguresArgs figures_args;
  auto* figures_cmd = app.add_subcommand("figures", "built-in example digraphs");
  std::vector<std::string> names;
  for (const auto& [name, f] : figure_digraphs()) names.push_back(name);
  figures_cmd->add_option("--name", figures_args.name)->check(CLI::IsMember(names));
  figures_cmd->add_option("--format", figures_args.format)->check(formats);
  figures_cmd->add_option("--output", figures_args.output);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "bounded verification of catalog claims");
  verify_cmd->add_option("--claim", verify_args.claims, "claim id, comma list, or 'all'");
  verify_cmd->add_option("--n-max", verify_args.n_max);
  verify_cmd->add_option("--m", verify_args.m, "m values, e.g. 1..6,8 (default 1..6)");
  verify_cmd->add_option("--mode", verify_args.mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--samples", verify_args.samples);
  verify_cmd->add_option("--workers", verify_args.workers)->check(CLI::Range(1u, 1024u));
  verify_cmd->add_flag("--large", verify_args.large, "allow exhaustive runs above n = 4");
  verify_cmd->add_option("--output", verify_args.output, "append JSON lines to this file");
  verify_cmd->add_option("--replay", verify_args.replay, "replay entries of a report file");
  verify_cmd->add_flag("--include-boundary", verify_args.include_boundary,
                       "also replay boundary instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (compete_cmd->parsed()) return compete(compete_args, out);
    if (classify_cmd->parsed()) return classify(classify_args, out);
    if (enumerate_cmd->parsed()) return enumerate(enumerate_args, out);
    if (generate_cmd->parsed()) return generate(generate_args, out);
    if (figures_cmd->parsed()) return figures(figures_args, out);
    return verify(verify_args, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace mstep::cli
