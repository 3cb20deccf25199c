#include "mstep/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

#include "mstep/error.hpp"

namespace mstep {

namespace {

// Dense rows cost n^2 bits; anything beyond this is almost surely a typo.
constexpr std::uint64_t kMaxParsedOrder = 10000;

struct ParsedEdgeList {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

ParsedEdgeList parse_edge_list(std::string_view text) {
  ParsedEdgeList out;
  bool have_order = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!have_order) {
      if (tokens.size() != 1) {
        throw InputError("line " + std::to_string(line_no) +
                         ": first line must hold the vertex count");
      }
      out.n = parse_number(tokens[0], line_no);
      if (out.n == 0) {
        throw InputError("line " + std::to_string(line_no) + ": vertex count must be positive");
      }
      if (out.n > kMaxParsedOrder) {
        throw InputError("line " + std::to_string(line_no) + ": vertex count exceeds " +
                         std::to_string(kMaxParsedOrder));
      }
      have_order = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const auto u = parse_number(tokens[0], line_no);
    const auto v = parse_number(tokens[1], line_no);
    if (u >= out.n || v >= out.n) {
      throw InputError("line " + std::to_string(line_no) + ": pair (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range for order " + std::to_string(out.n));
    }
    out.pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_order) throw InputError("empty input: missing vertex count");
  return out;
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void write_nodes(std::ostringstream& os, std::size_t n, std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw InputError("label map has " + std::to_string(labels.size()) + " entries for " +
                     std::to_string(n) + " vertices");
  }
  for (std::size_t v = 0; v < n; ++v) {
    os << "  " << v;
    if (!labels.empty()) os << " [label=" << quoted(labels[v]) << "]";
    os << ";\n";
  }
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const auto parsed = parse_edge_list(text);
  DigraphBuilder builder(parsed.n);
  for (const auto& [u, v] : parsed.pairs) builder.add_arc(u, v);
  return builder.build();
}

Digraph read_digraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw InputError("failed to read digraph input");
  return parse_digraph(text);
}

Graph parse_graph(std::string_view text) {
  const auto parsed = parse_edge_list(text);
  GraphBuilder builder(parsed.n);
  for (const auto& [u, v] : parsed.pairs) builder.add_edge(u, v);
  return builder.build();
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream os;
  os << d.order() << '\n';
  for (const Arc& a : d.arcs()) os << a.from << ' ' << a.to << '\n';
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string to_dot(const Digraph& d, std::span<const std::string> labels, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  write_nodes(os, d.order(), labels);
  for (const Arc& a : d.arcs()) os << "  " << a.from << " -> " << a.to << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Graph& g, std::span<const std::string> labels, std::string_view name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  write_nodes(os, g.order(), labels);
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mstep
