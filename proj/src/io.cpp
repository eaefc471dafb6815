#include "dqa/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dqa {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::uint64_t parse_label(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

// Content lines of the stream with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(n, std::string(t));
  }
  return out;
}

struct RawEdge {
  std::uint64_t u;
  std::uint64_t v;
  std::size_t line;
};

RawEdge parse_edge(std::string_view text, std::size_t line) {
  const auto tok = tokens(text);
  if (tok.size() != 2) fail(line, "expected two vertex labels \"u v\"");
  RawEdge e{parse_label(tok[0], line), parse_label(tok[1], line), line};
  if (e.u == e.v) fail(line, "self-loop " + std::to_string(e.u) + " -> " + std::to_string(e.v));
  return e;
}

// Drops repeated ordered pairs, recording a warning for each.
std::vector<EdgePair> dedupe(const std::vector<RawEdge>& raw,
                             const std::vector<std::uint64_t>& labels,
                             std::vector<std::string>& warnings) {
  auto id = [&](std::uint64_t label) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), label) -
                                 labels.begin());
  };
  std::set<EdgePair> seen;
  std::vector<EdgePair> edges;
  for (const auto& e : raw) {
    const EdgePair p{id(e.u), id(e.v)};
    if (!seen.insert(p).second) {
      warnings.push_back("line " + std::to_string(e.line) + ": duplicate edge " +
                         std::to_string(e.u) + " " + std::to_string(e.v) + " ignored");
      continue;
    }
    edges.push_back(p);
  }
  return edges;
}

}  // namespace

InputFormat parse_input_format(std::string_view token) {
  if (token == "edgelist") return InputFormat::EdgeList;
  if (token == "flag") return InputFormat::Flag;
  throw std::invalid_argument("unknown input format '" + std::string(token) +
                              "' (expected edgelist or flag)");
}

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<RawEdge> raw;
  for (const auto& [line, text] : content_lines(in)) raw.push_back(parse_edge(text, line));

  LoadedGraph out;
  for (const auto& e : raw) {
    out.labels.push_back(e.u);
    out.labels.push_back(e.v);
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
  if (out.labels.size() > std::numeric_limits<VertexId>::max()) {
    throw GraphError("too many distinct vertex labels");
  }
  const auto edges = dedupe(raw, out.labels, out.warnings);
  out.graph = DirectedGraph(out.labels.size(), edges);
  return out;
}

LoadedGraph load_flag(std::istream& in) {
  const auto lines = content_lines(in);
  auto expect_header = [&](std::size_t idx, std::string_view header) {
    if (idx >= lines.size()) {
      throw GraphError("flag input: missing \"" + std::string(header) + "\" section");
    }
    if (tokens(lines[idx].second) != std::vector<std::string_view>{"dim", header.substr(4)}) {
      fail(lines[idx].first, "expected \"" + std::string(header) + "\"");
    }
  };
  LoadedGraph out;
  if (lines.empty()) return out;
  expect_header(0, "dim 0");
  if (lines.size() < 2) throw GraphError("flag input: missing vertex count");
  const auto count_tok = tokens(lines[1].second);
  if (count_tok.size() != 1) fail(lines[1].first, "expected a single vertex count");
  const std::uint64_t n = parse_label(count_tok[0], lines[1].first);
  if (n > std::numeric_limits<VertexId>::max()) fail(lines[1].first, "vertex count too large");

  std::vector<RawEdge> raw;
  if (lines.size() > 2) {
    expect_header(2, "dim 1");
    for (std::size_t k = 3; k < lines.size(); ++k) {
      const auto& [line, text] = lines[k];
      if (trim(text).starts_with("dim")) fail(line, "only dim 0 and dim 1 sections are supported");
      const RawEdge e = parse_edge(text, line);
      if (e.u >= n || e.v >= n) {
        fail(line, "vertex out of range (vertex count is " + std::to_string(n) + ")");
      }
      raw.push_back(e);
    }
  }
  out.labels.resize(n);
  for (std::uint64_t v = 0; v < n; ++v) out.labels[v] = v;
  const auto edges = dedupe(raw, out.labels, out.warnings);
  out.graph = DirectedGraph(n, edges);
  return out;
}

LoadedGraph load_graph(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return format == InputFormat::Flag ? load_flag(in) : load_edge_list(in);
}

std::string level_summary(const FlagComplex& complex) {
  std::ostringstream os;
  const auto sizes = complex.level_sizes();
  if (sizes.empty()) return "dim 0: 0";
  for (std::size_t d = 0; d < sizes.size(); ++d) {
    if (d) os << ", ";
    os << "dim " << d << ": " << sizes[d];
  }
  return os.str();
}

void write_simplices(std::ostream& os, const FlagComplex& complex, int min_dim) {
  for (int d = std::max(min_dim, 0); d <= complex.max_dim(); ++d) {
    const auto level = complex.level(d);
    for (std::size_t k = 0; k < level.size(); ++k) {
      os << d << '.' << k << '\t' << d << '\t';
      const auto& s = level[k];
      for (std::size_t p = 0; p < s.size(); ++p) os << (p ? " " : "") << s[p];
      os << '\n';
    }
  }
}

void write_q_edges(std::ostream& os, const QDigraph& g) {
  for (const Edge& e : g.edges) {
    os << e.src.to_string() << '\t' << e.dst.to_string() << '\t' << to_string(e.provenance)
       << '\n';
  }
}

void write_vertex_map(std::ostream& os, const LoadedGraph& loaded) {
  for (std::size_t v = 0; v < loaded.labels.size(); ++v) os << v << '\t' << loaded.labels[v] << '\n';
}

}  // namespace dqa
