#ifndef NGCOLOR_COLORING_HPP
#define NGCOLOR_COLORING_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "ngcolor/graph.hpp"

namespace ngcolor {

/// The four chromatic variants. Each reduces to a proper coloring of the
/// matching derived graph; `proper` colors the graph itself.
enum class VariantKind { proper, two_proper, injective, square };

constexpr DerivedKind derived_kind_for(VariantKind kind) {
  switch (kind) {
    case VariantKind::two_proper: return DerivedKind::distance_exactly_two;
    case VariantKind::injective: return DerivedKind::common_neighbor;
    default: return DerivedKind::distance_at_most_two;
  }
}

/// Optimal color count plus a witness assignment with colors 1..value
/// (empty for the order-0 graph).
struct ColoringResult {
  int value = 0;
  std::vector<int> assignment;
};

/// Exact maximum clique size via binary branching on the lowest-index
/// candidate, pruned by the candidate-count bound.
inline int max_clique_size(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (!cand) {
      best = size;
      return;
    }
    const int v = std::countr_zero(cand);
    const std::uint64_t rest = cand & (cand - 1);
    self(self, rest & g.neighbors(v), size + 1);
    self(self, rest, size);
  };
  rec(rec, Graph::vertex_mask(n), 0);
  return best;
}

/// Greedy coloring in vertex index order; writes 0-based colors into `colors`
/// and returns the color count. Always <= max degree + 1.
inline int greedy_coloring(const Graph& g, std::span<int> colors) {
  const int n = g.order();
  int used = 0;
  for (int v = 0; v < n; ++v) {
    std::uint64_t taken = 0;
    for (std::uint64_t m = g.neighbors(v) & (Graph::vertex_mask(v)); m; m &= m - 1)
      taken |= std::uint64_t{1} << colors[std::countr_zero(m)];
    const int c = std::countr_one(taken);
    colors[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

inline int greedy_upper_bound(const Graph& g) {
  std::array<int, Graph::max_order> colors{};
  return greedy_coloring(g, std::span(colors.data(), g.order()));
}

namespace detail {

/// DSATUR-ordered branch and bound. Branching vertex: highest saturation
/// degree, ties broken by lowest index; colors tried in ascending order with
/// at most one fresh color per node. Colors are capped at 63, which the
/// greedy incumbent (<= max degree + 1 <= order) never exceeds.
struct ChiSearch {
  const Graph& g;
  int n;
  int lower_bound;
  int best;
  std::array<int, Graph::max_order> color{};
  std::array<int, Graph::max_order> best_color{};
  std::array<std::uint64_t, Graph::max_order> nbr_colors{};

  explicit ChiSearch(const Graph& graph) : g(graph), n(graph.order()) {
    color.fill(-1);
  }

  void run(int colored, int used) {
    if (best <= lower_bound || used >= best) return;
    if (colored == n) {
      best = used;
      best_color = color;
      return;
    }
    int v = -1, sat = -1;
    for (int u = 0; u < n; ++u)
      if (color[u] < 0) {
        const int s = std::popcount(nbr_colors[u]);
        if (s > sat) {
          sat = s;
          v = u;
        }
      }
    for (int c = 0; c < std::min(used + 1, best - 1); ++c) {
      if (nbr_colors[v] >> c & 1) continue;
      color[v] = c;
      std::uint64_t touched = 0;
      for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
        const int w = std::countr_zero(m);
        if (color[w] < 0 && !(nbr_colors[w] >> c & 1)) {
          nbr_colors[w] |= std::uint64_t{1} << c;
          touched |= std::uint64_t{1} << w;
        }
      }
      run(colored + 1, std::max(used, c + 1));
      for (std::uint64_t m = touched; m; m &= m - 1)
        nbr_colors[std::countr_zero(m)] &= ~(std::uint64_t{1} << c);
      color[v] = -1;
      if (best <= lower_bound) return;
    }
  }
};

}  // namespace detail

/// Exact chromatic number with an optimal certificate, deterministic for a
/// fixed input graph.
inline ColoringResult chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};

  detail::ChiSearch search(g);
  search.best = greedy_coloring(g, std::span(search.best_color.data(), n));
  search.lower_bound = max_clique_size(g);
  if (search.best > search.lower_bound) search.run(0, 0);

  ColoringResult result;
  result.value = search.best;
  result.assignment.reserve(n);
  for (int v = 0; v < n; ++v) result.assignment.push_back(search.best_color[v] + 1);
  return result;
}

/// Variant chromatic number by reduction to the derived graph. The returned
/// certificate is proper on that derived graph.
inline ColoringResult variant_chromatic(const Graph& g, VariantKind kind) {
  if (kind == VariantKind::proper) return chromatic_number(g);
  return chromatic_number(derived_graph(g, derived_kind_for(kind)));
}

/// True iff `assignment` maps every vertex to a color in 1..k and no edge of
/// g is monochromatic.
inline bool is_valid_coloring(const Graph& g, std::span<const int> assignment, int k) {
  const int n = g.order();
  if (static_cast<int>(assignment.size()) != n) return false;
  for (int v = 0; v < n; ++v)
    if (assignment[v] < 1 || assignment[v] > k) return false;
  for (const auto& [u, v] : g.edges())
    if (assignment[u] == assignment[v]) return false;
  return true;
}

}  // namespace ngcolor

#endif  // NGCOLOR_COLORING_HPP
