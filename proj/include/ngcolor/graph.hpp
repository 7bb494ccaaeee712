#ifndef NGCOLOR_GRAPH_HPP
#define NGCOLOR_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ngcolor {

/// Immutable simple graph on at most 64 vertices. Each adjacency row is a
/// single machine word, so neighborhood intersections and complements are
/// word-parallel. Vertices are 0-based contiguous indices.
class Graph {
 public:
  static constexpr int max_order = 64;
  using Edge = std::pair<int, int>;

  Graph() = default;

  /// Empty graph (no edges) on `order` vertices.
  explicit Graph(int order) : n_(order), rows_(check_order(order), 0) {}

  static Graph from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= order || v < 0 || v >= order)
        throw std::out_of_range("edge endpoint " + std::to_string(u) + "," +
                                std::to_string(v) + " outside [0," +
                                std::to_string(order) + ")");
      if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
      g.rows_[u] |= bit(v);
      g.rows_[v] |= bit(u);
    }
    return g;
  }

  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Graph from a packed edge bitmask, one bit per unordered pair in
  /// column-major upper-triangle order: pair (i,j) with i<j sits at bit
  /// j*(j-1)/2 + i. Requires order <= 11 so all pairs fit in 64 bits.
  static Graph from_edge_bits(int order, std::uint64_t bits) {
    if (order < 0 || order > 11)
      throw std::out_of_range("edge-bitmask graphs limited to order <= 11");
    Graph g(order);
    int idx = 0;
    for (int j = 1; j < order; ++j)
      for (int i = 0; i < j; ++i, ++idx)
        if (bits >> idx & 1) {
          g.rows_[i] |= bit(j);
          g.rows_[j] |= bit(i);
        }
    return g;
  }

  int order() const noexcept { return n_; }

  bool adjacent(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return rows_[u] >> v & 1;
  }

  /// Neighborhood of v as a bitmask over vertex indices.
  std::uint64_t neighbors(int v) const {
    assert(v >= 0 && v < n_);
    return rows_[v];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto row : rows_) twice += std::popcount(row);
    return twice / 2;
  }

  /// Edges as (u,v) pairs with u < v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
      for (std::uint64_t m = rows_[u] & above_mask(u); m; m &= m - 1)
        out.emplace_back(u, std::countr_zero(m));
    return out;
  }

  Graph complement() const {
    Graph g(n_);
    const std::uint64_t all = vertex_mask(n_);
    for (int v = 0; v < n_; ++v) g.rows_[v] = ~rows_[v] & all & ~bit(v);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  /// Bitmask with one bit per vertex of an order-n graph.
  static constexpr std::uint64_t vertex_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  /// Bitmask of all vertices with index strictly greater than v.
  static constexpr std::uint64_t above_mask(int v) {
    return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1);
  }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  static int check_order(int order) {
    if (order < 0 || order > max_order)
      throw std::out_of_range("graph order " + std::to_string(order) +
                              " outside [0," + std::to_string(max_order) + "]");
    return order;
  }

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// All-pairs shortest path lengths. Pairs in different components carry the
/// `unreachable` sentinel, which is strictly larger than any path length; in
/// particular a disconnected pair is never at distance <= 2.
class DistanceMatrix {
 public:
  static constexpr int unreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int order) : n_(order), d_(std::size_t(order) * order, unreachable) {}

  int order() const noexcept { return n_; }

  int at(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return d_[std::size_t(u) * n_ + v];
  }

  int& at(int u, int v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return d_[std::size_t(u) * n_ + v];
  }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

/// BFS from every vertex, expanding whole frontiers with word operations.
inline DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    dm.at(s, s) = 0;
    for (int dist = 1; frontier; ++dist) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1)
        next |= g.neighbors(std::countr_zero(m));
      next &= ~seen;
      for (std::uint64_t m = next; m; m &= m - 1) dm.at(s, std::countr_zero(m)) = dist;
      seen |= next;
      frontier = next;
    }
  }
  return dm;
}

/// Which auxiliary graph to derive on the same vertex set:
///  - distance_exactly_two: uv is an edge iff d(u,v) = 2
///  - common_neighbor:      uv is an edge iff u != v and N(u) meets N(v)
///  - distance_at_most_two: uv is an edge iff 1 <= d(u,v) <= 2 (the square)
enum class DerivedKind { distance_exactly_two, common_neighbor, distance_at_most_two };

inline Graph derived_graph(const Graph& g, DerivedKind kind) {
  const int n = g.order();
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool adj = g.adjacent(u, v);
      const bool share = (g.neighbors(u) & g.neighbors(v)) != 0;
      bool keep = false;
      switch (kind) {
        case DerivedKind::distance_exactly_two: keep = !adj && share; break;
        case DerivedKind::common_neighbor: keep = share; break;
        case DerivedKind::distance_at_most_two: keep = adj || share; break;
      }
      if (keep) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> degree_sequence;  // per vertex, index order
  bool is_regular = true;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  const int n = g.order();
  if (n == 0) return s;  // order 0: max = min = 0 by convention
  s.degree_sequence.reserve(n);
  s.max_degree = 0;
  s.min_degree = n;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    s.degree_sequence.push_back(d);
    s.max_degree = std::max(s.max_degree, d);
    s.min_degree = std::min(s.min_degree, d);
  }
  s.is_regular = s.max_degree == s.min_degree;
  return s;
}

inline bool is_triangle_free(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = g.neighbors(u) & Graph::above_mask(u); m; m &= m - 1)
      if (g.neighbors(u) & g.neighbors(std::countr_zero(m))) return false;
  return true;
}

}  // namespace ngcolor

#endif  // NGCOLOR_GRAPH_HPP
