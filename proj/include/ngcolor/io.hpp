#ifndef NGCOLOR_IO_HPP
#define NGCOLOR_IO_HPP

#include <cstddef>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngcolor/graph.hpp"

namespace ngcolor {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_number(line) {}
  std::size_t line_number;
};

/// Raised for structurally recognized but unsupported encodings (graph6
/// long form), as opposed to malformed input.
struct UnsupportedFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view graph6_header = ">>graph6<<";

// graph6 short form: byte 0 is order+63 (order <= 62); the remaining bytes
// pack the upper-triangle adjacency bits in column-major order, 6 bits per
// byte, each byte offset by 63, zero-padded at the end.

inline Graph parse_graph6(std::string_view record) {
  if (record.empty()) throw ParseError("empty graph6 record");
  const unsigned char head = record[0];
  if (head == 126) throw UnsupportedFormatError("graph6 long form (order > 62) not supported");
  if (head < 63 || head > 126)
    throw ParseError("graph6 byte out of range 63..126");
  const int n = head - 63;
  const std::size_t payload = (std::size_t(n) * (n - 1) / 2 + 5) / 6;
  if (record.size() < 1 + payload) throw ParseError("truncated graph6 bit payload");
  if (record.size() > 1 + payload) throw ParseError("trailing bytes after graph6 record");

  std::vector<Graph::Edge> edges;
  std::size_t bit_index = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit_index) {
      const unsigned char byte = record[1 + bit_index / 6];
      if (byte < 63 || byte > 126) throw ParseError("graph6 byte out of range 63..126");
      if ((byte - 63) >> (5 - bit_index % 6) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::out_of_range("graph6 short form limited to order <= 62");
  std::string out;
  out.reserve(1 + (std::size_t(n) * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int bits = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bits = bits << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + 63));
        bits = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((bits << (6 - filled)) + 63));
  return out;
}

/// Calls fn(graph, line_number) for each non-empty line of a graph6 stream.
/// A leading ">>graph6<<" header is consumed once; parse errors are rethrown
/// with the offending line number attached.
template <class Fn>
void for_each_graph6(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view record = line;
    if (first && record.substr(0, graph6_header.size()) == graph6_header)
      record.remove_prefix(graph6_header.size());
    first = false;
    if (record.empty()) continue;
    try {
      fn(parse_graph6(record), line_number);
    } catch (const UnsupportedFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_number);
    }
  }
}

inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  for_each_graph6(in, [&](Graph g, std::size_t) { graphs.push_back(std::move(g)); });
  return graphs;
}

// Edge-list text: a header line "n <order>" followed by one "u v" line per
// edge, 0-based.

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  int order = -1;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    if (order < 0) {
      std::string tag;
      if (!(fields >> tag >> order) || tag != "n" || order < 0)
        throw ParseError("expected header \"n <order>\"", line_number);
      std::string rest;
      if (fields >> rest) throw ParseError("trailing fields after header", line_number);
      continue;
    }
    int u, v;
    if (!(fields >> u >> v)) throw ParseError("expected edge \"u v\"", line_number);
    std::string rest;
    if (fields >> rest) throw ParseError("trailing fields after edge", line_number);
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw ParseError("vertex index out of range", line_number);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_number);
    edges.emplace_back(u, v);
  }
  if (order < 0) throw ParseError("missing header \"n <order>\"");
  return Graph::from_edges(order, edges);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Undirected DOT document: vertices declared in index order, each edge
/// once. `labels`, when non-empty, must name every vertex.
inline std::string export_dot(const Graph& g, std::span<const std::string> labels = {}) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order())
    throw std::invalid_argument("label count does not match graph order");
  std::string out = "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (!labels.empty()) out += " [label=\"" + labels[v] + "\"]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ngcolor

#endif  // NGCOLOR_IO_HPP
