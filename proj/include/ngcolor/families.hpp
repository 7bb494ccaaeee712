#ifndef NGCOLOR_FAMILIES_HPP
#define NGCOLOR_FAMILIES_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ngcolor/graph.hpp"

namespace ngcolor {

enum class Family {
  path,
  cycle,
  complete,
  empty_graph,
  complete_bipartite,
  complete_multipartite,
  h_graph,
  h_odd,
  h_even,
  g_injective,
  f_square,
};

/// Which family to build plus its integer parameters. Factories validate
/// parameter ranges; complete_multipartite part lists are normalized to
/// descending order.
struct FamilySpec {
  Family family;
  std::vector<int> params;

  static FamilySpec path(int n) { return checked(Family::path, {n}, 0); }
  static FamilySpec cycle(int n) { return checked(Family::cycle, {n}, 3); }
  static FamilySpec complete(int n) { return checked(Family::complete, {n}, 0); }
  static FamilySpec empty(int n) { return checked(Family::empty_graph, {n}, 0); }

  static FamilySpec complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
      throw std::out_of_range("complete-bipartite parts must be >= 1");
    return {Family::complete_bipartite, {a, b}};
  }

  static FamilySpec complete_multipartite(std::vector<int> parts) {
    if (parts.empty()) throw std::out_of_range("complete-multipartite needs >= 1 part");
    for (int p : parts)
      if (p < 1) throw std::out_of_range("complete-multipartite parts must be >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return {Family::complete_multipartite, std::move(parts)};
  }

  static FamilySpec h_graph(int k) { return checked(Family::h_graph, {k}, 6); }
  static FamilySpec h_odd(int k) { return checked(Family::h_odd, {k}, 6); }
  static FamilySpec h_even(int k) { return checked(Family::h_even, {k}, 6); }
  static FamilySpec g_injective(int n) { return checked(Family::g_injective, {n}, 9); }
  static FamilySpec f_square(int n) { return checked(Family::f_square, {n}, 5); }

 private:
  static FamilySpec checked(Family f, std::vector<int> params, int minimum) {
    if (params.front() < minimum)
      throw std::out_of_range("family parameter " + std::to_string(params.front()) +
                              " below minimum " + std::to_string(minimum));
    return {f, std::move(params)};
  }
};

namespace detail {

inline Graph build_multipartite(std::span<const int> parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<Graph::Edge> edges;
  std::vector<int> part_of;
  part_of.reserve(n);
  for (std::size_t i = 0; i < parts.size(); ++i)
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Vertices 0..k-1 are the independent set X, k..2k-1 the clique Y. x_i is
// joined to y_{i+t mod k} for t = 0..floor(k/2) skipping t = floor(k/2)-1.
inline std::vector<Graph::Edge> h_graph_edges(int k) {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(k + i, k + j);
  const int half = k / 2;
  for (int i = 0; i < k; ++i)
    for (int t = 0; t <= half; ++t) {
      if (t == half - 1) continue;
      edges.emplace_back(i, k + (i + t) % k);
    }
  return edges;
}

// Three k-cliques X = 0..k-1, Y = k..2k-1, Z = 2k..3k-1 with each triple
// {x_i, y_i, z_i} a clique; appended vertices are joined to all of X and
// stay mutually non-adjacent.
inline Graph build_g_injective(int n) {
  const int k = n / 3;
  const int t = n % 3;
  std::vector<Graph::Edge> edges;
  for (int block = 0; block < 3; ++block)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.emplace_back(block * k + i, block * k + j);
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, k + i);
    edges.emplace_back(i, 2 * k + i);
    edges.emplace_back(k + i, 2 * k + i);
  }
  for (int extra = 0; extra < t; ++extra)
    for (int i = 0; i < k; ++i) edges.emplace_back(3 * k + extra, i);
  return Graph::from_edges(n, edges);
}

// A 5-cycle on 0..4 plus an independent set 5..n-1, each joined to exactly
// vertices 0 and 2 of the cycle.
inline Graph build_f_square(int n) {
  std::vector<Graph::Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  for (int y = 5; y < n; ++y) {
    edges.emplace_back(y, 0);
    edges.emplace_back(y, 2);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace detail

inline Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: {
      std::vector<Graph::Edge> edges;
      for (int v = 0; v + 1 < p[0]; ++v) edges.emplace_back(v, v + 1);
      return Graph::from_edges(p[0], edges);
    }
    case Family::cycle: {
      std::vector<Graph::Edge> edges;
      for (int v = 0; v + 1 < p[0]; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(p[0] - 1, 0);
      return Graph::from_edges(p[0], edges);
    }
    case Family::complete:
      return Graph(p[0]).complement();
    case Family::empty_graph:
      return Graph(p[0]);
    case Family::complete_bipartite: {
      std::vector<Graph::Edge> edges;
      for (int u = 0; u < p[0]; ++u)
        for (int v = 0; v < p[1]; ++v) edges.emplace_back(u, p[0] + v);
      return Graph::from_edges(p[0] + p[1], edges);
    }
    case Family::complete_multipartite:
      return detail::build_multipartite(p);
    case Family::h_graph:
      return Graph::from_edges(2 * p[0], detail::h_graph_edges(p[0]));
    case Family::h_odd: {
      const int k = p[0];
      auto edges = detail::h_graph_edges(k);
      for (int j = 0; j < k; ++j) edges.emplace_back(2 * k, k + j);
      return Graph::from_edges(2 * k + 1, edges);
    }
    case Family::h_even: {
      const int k = p[0];
      auto edges = detail::h_graph_edges(k);
      for (int extra = 0; extra < 2; ++extra)
        for (int j = 0; j < k; ++j) edges.emplace_back(2 * k + extra, k + j);
      return Graph::from_edges(2 * k + 2, edges);
    }
    case Family::g_injective:
      return detail::build_g_injective(p[0]);
    case Family::f_square:
      return detail::build_f_square(p[0]);
  }
  throw std::logic_error("unhandled family");
}

/// Per-vertex names matching the documented layouts, for DOT export.
inline std::vector<std::string> vertex_labels(const FamilySpec& spec) {
  std::vector<std::string> labels;
  auto block = [&](std::string_view prefix, int count, int base) {
    for (int i = 0; i < count; ++i)
      labels.push_back(std::string(prefix) + std::to_string(base + i));
  };
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::complete_bipartite:
      block("a", p[0], 0);
      block("b", p[1], 0);
      break;
    case Family::complete_multipartite:
      for (std::size_t i = 0; i < p.size(); ++i)
        block("p" + std::to_string(i) + "_", p[i], 0);
      break;
    case Family::h_graph:
    case Family::h_odd:
    case Family::h_even:
      block("x", p[0], 0);
      block("y", p[0], 0);
      if (spec.family == Family::h_odd) labels.push_back("inf");
      if (spec.family == Family::h_even) {
        labels.push_back("inf1");
        labels.push_back("inf2");
      }
      break;
    case Family::g_injective: {
      const int k = p[0] / 3;
      block("x", k, 1);
      block("y", k, 1);
      block("z", k, 1);
      for (int extra = 1; extra <= p[0] % 3; ++extra)
        labels.push_back("inf" + std::to_string(extra));
      break;
    }
    case Family::f_square:
      block("x", 5, 1);
      block("y", p[0] - 5, 1);
      break;
    default:
      block("v", p[0], 0);
      break;
  }
  return labels;
}

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::empty_graph: return "empty";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::complete_multipartite: return "complete-multipartite";
    case Family::h_graph: return "h-graph";
    case Family::h_odd: return "h-odd";
    case Family::h_even: return "h-even";
    case Family::g_injective: return "g-injective";
    case Family::f_square: return "f-square";
  }
  return "?";
}

/// Builds a FamilySpec from a CLI-style name and parameter list.
inline FamilySpec parse_family(std::string_view name, const std::vector<int>& params) {
  auto arity = [&](std::size_t want) {
    if (params.size() != want)
      throw std::invalid_argument("family '" + std::string(name) + "' takes " +
                                  std::to_string(want) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  if (name == "path") { arity(1); return FamilySpec::path(params[0]); }
  if (name == "cycle") { arity(1); return FamilySpec::cycle(params[0]); }
  if (name == "complete") { arity(1); return FamilySpec::complete(params[0]); }
  if (name == "empty") { arity(1); return FamilySpec::empty(params[0]); }
  if (name == "complete-bipartite") { arity(2); return FamilySpec::complete_bipartite(params[0], params[1]); }
  if (name == "complete-multipartite") {
    if (params.empty()) throw std::invalid_argument("complete-multipartite needs part sizes");
    return FamilySpec::complete_multipartite(params);
  }
  if (name == "h-graph") { arity(1); return FamilySpec::h_graph(params[0]); }
  if (name == "h-odd") { arity(1); return FamilySpec::h_odd(params[0]); }
  if (name == "h-even") { arity(1); return FamilySpec::h_even(params[0]); }
  if (name == "g-injective") { arity(1); return FamilySpec::g_injective(params[0]); }
  if (name == "f-square") { arity(1); return FamilySpec::f_square(params[0]); }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace ngcolor

#endif  // NGCOLOR_FAMILIES_HPP
