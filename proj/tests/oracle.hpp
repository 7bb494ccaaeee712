#ifndef NGCOLOR_TESTS_ORACLE_HPP
#define NGCOLOR_TESTS_ORACLE_HPP

// Test-only oracles, deliberately independent of the solver implementations:
// plain exhaustive searches with no ordering heuristics, bounds or pruning
// beyond skipping already-conflicted partial assignments.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "ngcolor/graph.hpp"

namespace ngcolor::oracle {

namespace detail {

inline bool extend_coloring(const Graph& g, std::vector<int>& color, int v, int k) {
  if (v == g.order()) return true;
  for (int c = 1; c <= k; ++c) {
    bool clash = false;
    for (int u = 0; u < v && !clash; ++u) clash = g.adjacent(u, v) && color[u] == c;
    if (clash) continue;
    color[v] = c;
    if (extend_coloring(g, color, v + 1, k)) return true;
  }
  color[v] = 0;
  return false;
}

}  // namespace detail

/// Smallest k = 1, 2, ... admitting a proper k-coloring, by trying every
/// assignment in vertex order.
inline int brute_force_chromatic(const Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(g.order(), 0);
    if (detail::extend_coloring(g, color, 0, k)) return k;
  }
}

/// Maximum clique by checking all 2^n vertex subsets.
inline int brute_force_clique(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    bool clique = true;
    for (std::uint64_t m = subset; m && clique; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t below = subset & ((std::uint64_t{1} << v) - 1);
      clique = (below & ~g.neighbors(v)) == 0;
    }
    if (clique) best = std::max(best, std::popcount(subset));
  }
  return best;
}

/// Least k admitting an L(p,q)-labeling, by enumerating all (k+1)^n label
/// vectors. Only usable for very small graphs.
inline int brute_force_lambda(const Graph& g, int p, int q) {
  const int n = g.order();
  if (n == 0) return 0;
  const DistanceMatrix dist = distance_matrix(g);
  for (int k = 0;; ++k) {
    std::vector<int> label(n, 0);
    while (true) {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        for (int v = u + 1; v < n && ok; ++v) {
          const int d = dist.at(u, v);
          const int gap = std::abs(label[u] - label[v]);
          if (d == 1 && gap < p) ok = false;
          if (d == 2 && gap < q) ok = false;
        }
      if (ok) return k;
      int i = 0;
      while (i < n && label[i] == k) label[i++] = 0;
      if (i == n) break;
      ++label[i];
    }
  }
}

}  // namespace ngcolor::oracle

#endif  // NGCOLOR_TESTS_ORACLE_HPP
