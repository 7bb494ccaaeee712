#ifndef NGCOLOR_LPQ_HPP
#define NGCOLOR_LPQ_HPP

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

#include "ngcolor/coloring.hpp"
#include "ngcolor/graph.hpp"

namespace ngcolor {

/// Least k admitting labels 0..k with |f(u)-f(v)| >= p at distance 1 and
/// >= q at distance 2, plus a witness labeling whose maximum label is k.
/// The order-0 graph returns value 0 with an empty labeling by convention.
struct LabelingResult {
  int value = 0;
  std::vector<int> labeling;
};

namespace detail {

struct LpqSearch {
  int n;
  int p, q;
  int k;
  const DistanceMatrix& dist;
  std::vector<int> label;

  bool allowed(int v, int value) const {
    for (int u = 0; u < n; ++u) {
      if (label[u] < 0) continue;
      const int d = dist.at(u, v);
      const int gap = std::abs(label[u] - value);
      if (d == 1 && gap < p) return false;
      if (d == 2 && gap < q) return false;
    }
    return true;
  }

  // Depth-first assignment in index order with forward checking: after each
  // placement, every unlabeled vertex must retain at least one feasible label.
  bool assign(int v) {
    if (v == n) return true;
    for (int value = 0; value <= k; ++value) {
      if (!allowed(v, value)) continue;
      label[v] = value;
      bool dead = false;
      for (int u = v + 1; u < n && !dead; ++u) {
        bool live = false;
        for (int w = 0; w <= k && !live; ++w) live = allowed(u, w);
        dead = !live;
      }
      if (!dead && assign(v + 1)) return true;
      label[v] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Exact L(p,q)-labeling number, found by iterating k upward from a lower
/// bound (k >= chi - 1 whenever p >= 1, since such a labeling is proper)
/// and backtracking at each k. A zero coefficient makes its constraint
/// vacuous, so p = 0 and q = 0 need no special casing.
inline LabelingResult lpq_number(const Graph& g, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("L(p,q) coefficients must be nonnegative");
  const int n = g.order();
  if (n == 0) return {};

  const DistanceMatrix dist = distance_matrix(g);
  const int start = p >= 1 ? chromatic_number(g).value - 1 : 0;
  for (int k = std::max(start, 0);; ++k) {
    detail::LpqSearch search{n, p, q, k, dist, std::vector<int>(n, -1)};
    if (search.assign(0)) return {k, std::move(search.label)};
  }
}

/// True iff `labeling` uses labels 0..k, attains k somewhere (n > 0), and
/// respects the distance-1 and distance-2 separations.
inline bool is_valid_labeling(const Graph& g, std::span<const int> labeling, int k, int p, int q) {
  const int n = g.order();
  if (static_cast<int>(labeling.size()) != n) return false;
  bool attained = n == 0;
  for (int v = 0; v < n; ++v) {
    if (labeling[v] < 0 || labeling[v] > k) return false;
    attained |= labeling[v] == k;
  }
  if (!attained) return false;
  const DistanceMatrix dist = distance_matrix(g);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int d = dist.at(u, v);
      const int gap = std::abs(labeling[u] - labeling[v]);
      if (d == 1 && gap < p) return false;
      if (d == 2 && gap < q) return false;
    }
  return true;
}

}  // namespace ngcolor

#endif  // NGCOLOR_LPQ_HPP
