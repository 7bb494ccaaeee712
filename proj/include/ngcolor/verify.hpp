#ifndef NGCOLOR_VERIFY_HPP
#define NGCOLOR_VERIFY_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ngcolor/coloring.hpp"
#include "ngcolor/graph.hpp"
#include "ngcolor/io.hpp"

namespace ngcolor {

/// All eight chromatic parameters of a graph/complement pair, plus degree
/// statistics for both sides.
struct ParameterValues {
  int chi = 0;
  int chi_two = 0;
  int chi_injective = 0;
  int chi_square = 0;

  friend bool operator==(const ParameterValues&, const ParameterValues&) = default;
};

struct ParameterProfile {
  int order = 0;
  ParameterValues graph_side;
  ParameterValues complement_side;
  DegreeStats graph_degrees;
  DegreeStats complement_degrees;
};

inline ParameterValues parameter_values(const Graph& g) {
  return {
      chromatic_number(g).value,
      variant_chromatic(g, VariantKind::two_proper).value,
      variant_chromatic(g, VariantKind::injective).value,
      variant_chromatic(g, VariantKind::square).value,
  };
}

/// Computes all eight parameter values exactly; the complement is built once
/// and shared by both sides.
inline ParameterProfile evaluate_graph(const Graph& g) {
  const Graph comp = g.complement();
  ParameterProfile p;
  p.order = g.order();
  p.graph_side = parameter_values(g);
  p.complement_side = parameter_values(comp);
  p.graph_degrees = degree_stats(g);
  p.complement_degrees = degree_stats(comp);
  return p;
}

// Verified bounds, one id per sum/product/degree statement. Sum and product
// checks are symmetric in the graph and its complement; the two minimum-degree
// checks and the regular-graph check read the hypothesis off the graph side
// (sweeps enumerate every labeled graph, so complements are covered as their
// own entries).
enum class CheckId {
  ng_chi_sum,    // ceil(2*sqrt(n)) <= chi(G)+chi(~G) <= n+1
  ng_chi_prod,   // n <= chi(G)*chi(~G) <= floor((n+1)^2/4)
  twoprop_sum,   // 2 <= chi2(G)+chi2(~G) <= n+1
  inj_sum,       // n >= 5: lower n+1 for odd n >= 7, else n; upper 2n
  inj_prod,      // n >= 5: n <= chi_i(G)*chi_i(~G) <= n^2
  inj_lem4_1,    // n >= 5, 2*delta >= n+1  =>  chi_i(G) = n
  inj_lem4_2,    // n >= 5, delta = floor((n-1)/2)  =>  chi_i(G) >= delta+1
  inj_lem5,      // n >= 5, k-regular, 2k outside (n-2,n): lower n+1 or n
  sq_sum,        // n+1 <= chi_sq(G)+chi_sq(~G) <= 2n
  sq_prod,       // n <= chi_sq(G)*chi_sq(~G) <= n^2
};

inline constexpr std::array<CheckId, 10> all_checks = {
    CheckId::ng_chi_sum, CheckId::ng_chi_prod, CheckId::twoprop_sum,
    CheckId::inj_sum,    CheckId::inj_prod,    CheckId::inj_lem4_1,
    CheckId::inj_lem4_2, CheckId::inj_lem5,    CheckId::sq_sum,
    CheckId::sq_prod,
};

inline std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::ng_chi_sum: return "NG-CHI-SUM";
    case CheckId::ng_chi_prod: return "NG-CHI-PROD";
    case CheckId::twoprop_sum: return "TWOPROP-SUM";
    case CheckId::inj_sum: return "INJ-SUM";
    case CheckId::inj_prod: return "INJ-PROD";
    case CheckId::inj_lem4_1: return "INJ-LEM4-1";
    case CheckId::inj_lem4_2: return "INJ-LEM4-2";
    case CheckId::inj_lem5: return "INJ-LEM5";
    case CheckId::sq_sum: return "SQ-SUM";
    case CheckId::sq_prod: return "SQ-PROD";
  }
  return "?";
}

/// One verdict per check. Slack >= 0 means the bound holds, slack = 0 means
/// it is attained with equality; inapplicable checks report holds with zero
/// slack and no extremality.
struct CheckResult {
  CheckId id;
  bool applicable = false;
  bool holds = true;
  long long slack = 0;
  bool is_extremal = false;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct TheoremReport {
  std::array<CheckResult, all_checks.size()> checks{};

  const CheckResult& check(CheckId id) const {
    return checks[static_cast<std::size_t>(id)];
  }
};

namespace detail {

inline long long isqrt_floor(long long x) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Least integer >= 2*sqrt(n); chi sums are integers, so this is the exact
// integer form of the lower bound.
inline long long ceil_two_sqrt(long long n) {
  const long long s = isqrt_floor(4 * n);
  return s * s == 4 * n ? s : s + 1;
}

inline CheckResult bounded(CheckId id, bool applicable, long long lower, long long value,
                           long long upper) {
  CheckResult r{id};
  if (!applicable) return r;
  r.applicable = true;
  r.slack = std::min(value - lower, upper - value);
  r.holds = r.slack >= 0;
  r.is_extremal = r.slack == 0;
  return r;
}

// One-sided conclusion `value >= bound`; extremal when attained exactly.
inline CheckResult at_least(CheckId id, bool applicable, long long value, long long bound) {
  CheckResult r{id};
  if (!applicable) return r;
  r.applicable = true;
  r.slack = value - bound;
  r.holds = r.slack >= 0;
  r.is_extremal = r.slack == 0;
  return r;
}

// Equality conclusion `value = target` where value <= target always holds.
inline CheckResult exactly(CheckId id, bool applicable, long long value, long long target) {
  CheckResult r{id};
  if (!applicable) return r;
  r.applicable = true;
  r.slack = value - target;
  r.holds = r.slack == 0;
  r.is_extremal = r.holds;
  return r;
}

}  // namespace detail

inline TheoremReport check_theorems(const ParameterProfile& p) {
  const long long n = p.order;
  const auto& a = p.graph_side;
  const auto& b = p.complement_side;
  const long long delta = p.graph_degrees.min_degree;
  const bool regular = p.graph_degrees.is_regular;
  const long long k = p.graph_degrees.max_degree;

  const long long chi_sum = a.chi + b.chi;
  const long long chi_prod = static_cast<long long>(a.chi) * b.chi;
  const long long two_sum = a.chi_two + b.chi_two;
  const long long inj_sum = a.chi_injective + b.chi_injective;
  const long long inj_prod = static_cast<long long>(a.chi_injective) * b.chi_injective;
  const long long sq_sum = a.chi_square + b.chi_square;
  const long long sq_prod = static_cast<long long>(a.chi_square) * b.chi_square;

  const bool nonempty = n >= 1;
  const bool inj_order = n >= 5;
  const long long inj_lower = (n >= 7 && n % 2 == 1) ? n + 1 : n;

  // Lemma-5 hypothesis: regular with 2k > n, 2k < n-2, or equal to either
  // boundary; the gap 2k = n-1 (odd orders) is genuinely out of scope.
  const bool lem5_strict = regular && inj_order && (2 * k > n || 2 * k < n - 2);
  const bool lem5_boundary = regular && inj_order && (2 * k == n || 2 * k == n - 2);

  TheoremReport report;
  auto put = [&](CheckResult r) { report.checks[static_cast<std::size_t>(r.id)] = r; };

  put(detail::bounded(CheckId::ng_chi_sum, nonempty, detail::ceil_two_sqrt(n), chi_sum, n + 1));
  put(detail::bounded(CheckId::ng_chi_prod, nonempty, n, chi_prod, (n + 1) * (n + 1) / 4));
  put(detail::bounded(CheckId::twoprop_sum, nonempty, 2, two_sum, n + 1));
  put(detail::bounded(CheckId::inj_sum, inj_order, inj_lower, inj_sum, 2 * n));
  put(detail::bounded(CheckId::inj_prod, inj_order, n, inj_prod, n * n));
  put(detail::exactly(CheckId::inj_lem4_1, inj_order && 2 * delta >= n + 1, a.chi_injective, n));
  put(detail::at_least(CheckId::inj_lem4_2, inj_order && delta == (n - 1) / 2,
                       a.chi_injective, delta + 1));
  put(detail::bounded(CheckId::inj_lem5, lem5_strict || lem5_boundary,
                      lem5_strict ? n + 1 : n, inj_sum, 2 * n));
  put(detail::bounded(CheckId::sq_sum, nonempty, n + 1, sq_sum, 2 * n));
  put(detail::bounded(CheckId::sq_prod, nonempty, n, sq_prod, n * n));
  return report;
}

/// All 2^(n(n-1)/2) labeled graphs on a fixed vertex set, indexed by edge
/// bitmask in column-major pair order (see Graph::from_edge_bits).
class LabeledGraphs {
 public:
  explicit LabeledGraphs(int order) : n_(order) {
    if (order < 1 || order > 8)
      throw std::out_of_range("labeled enumeration supports orders 1..8");
  }

  int order() const noexcept { return n_; }

  std::uint64_t size() const {
    return std::uint64_t{1} << (n_ * (n_ - 1) / 2);
  }

  Graph at(std::uint64_t mask) const { return Graph::from_edge_bits(n_, mask); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t mask = 0; mask < size(); ++mask) fn(at(mask));
  }

 private:
  int n_;
};

struct CheckStats {
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  std::uint64_t extremal = 0;
  std::string extremal_witness;   // lexicographically least graph6, "" if none
  std::string violation_witness;  // lexicographically least graph6, "" if none

  friend bool operator==(const CheckStats&, const CheckStats&) = default;
};

/// Aggregate verdicts over a sweep. Orders <= 4 additionally record the
/// graphs falling below the injective sum/product thresholds that only bind
/// from order 5 on (the small-order exceptional sets).
struct SweepSummary {
  int order = -1;  // -1 for sources that mix orders
  std::uint64_t graph_count = 0;
  std::array<CheckStats, all_checks.size()> checks{};
  std::vector<std::string> injective_sum_exceptions;
  std::vector<std::string> injective_product_exceptions;
  std::int64_t elapsed_ms = 0;
};

inline std::uint64_t total_violations(const SweepSummary& s) {
  std::uint64_t total = 0;
  for (const auto& c : s.checks) total += c.violations;
  return total;
}

namespace detail {

inline void take_min_witness(std::string& into, const std::string& candidate) {
  if (into.empty() || candidate < into) into = candidate;
}

inline void accumulate(SweepSummary& s, const Graph& g, const std::string& g6) {
  const ParameterProfile profile = evaluate_graph(g);
  const TheoremReport report = check_theorems(profile);
  ++s.graph_count;
  for (std::size_t i = 0; i < all_checks.size(); ++i) {
    const CheckResult& r = report.checks[i];
    if (!r.applicable) continue;
    ++s.checks[i].applicable;
    if (!r.holds) {
      ++s.checks[i].violations;
      take_min_witness(s.checks[i].violation_witness, g6);
    }
    if (r.is_extremal) {
      ++s.checks[i].extremal;
      take_min_witness(s.checks[i].extremal_witness, g6);
    }
  }
  const int n = profile.order;
  if (n <= 4) {
    const long long sum = profile.graph_side.chi_injective + profile.complement_side.chi_injective;
    const long long prod = static_cast<long long>(profile.graph_side.chi_injective) *
                           profile.complement_side.chi_injective;
    if (sum < n) s.injective_sum_exceptions.push_back(g6);
    if (prod < n) s.injective_product_exceptions.push_back(g6);
  }
}

inline void merge_into(SweepSummary& into, SweepSummary&& part) {
  into.graph_count += part.graph_count;
  for (std::size_t i = 0; i < all_checks.size(); ++i) {
    auto& dst = into.checks[i];
    auto& src = part.checks[i];
    dst.applicable += src.applicable;
    dst.violations += src.violations;
    dst.extremal += src.extremal;
    if (!src.extremal_witness.empty()) take_min_witness(dst.extremal_witness, src.extremal_witness);
    if (!src.violation_witness.empty())
      take_min_witness(dst.violation_witness, src.violation_witness);
  }
  auto append = [](std::vector<std::string>& dst, std::vector<std::string>& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
  };
  append(into.injective_sum_exceptions, part.injective_sum_exceptions);
  append(into.injective_product_exceptions, part.injective_product_exceptions);
}

inline int resolve_workers(int workers, std::uint64_t jobs) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > jobs) workers = static_cast<int>(jobs);
  return std::min(workers, 64);
}

}  // namespace detail

/// Evaluates every labeled graph of the given order. The mask space is split
/// into contiguous chunks, one per worker; summaries merge commutatively, so
/// the result is independent of the worker count.
inline SweepSummary sweep_order(int order, int workers = 0) {
  const LabeledGraphs graphs(order);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = graphs.size();
  const int used = detail::resolve_workers(workers, total);

  std::vector<SweepSummary> parts(used);
  auto run = [&](int w) {
    const std::uint64_t lo = total / used * w + std::min<std::uint64_t>(w, total % used);
    const std::uint64_t hi = lo + total / used + (static_cast<std::uint64_t>(w) < total % used);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const Graph g = graphs.at(mask);
      detail::accumulate(parts[w], g, write_graph6(g));
    }
  };
  if (used == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int w = 0; w < used; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  SweepSummary summary;
  summary.order = order;
  for (auto& part : parts) detail::merge_into(summary, std::move(part));
  std::sort(summary.injective_sum_exceptions.begin(), summary.injective_sum_exceptions.end());
  std::sort(summary.injective_product_exceptions.begin(),
            summary.injective_product_exceptions.end());
  summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return summary;
}

inline std::vector<SweepSummary> sweep_orders(int lo, int hi, int workers = 0) {
  if (lo > hi) throw std::invalid_argument("empty order range");
  std::vector<SweepSummary> out;
  out.reserve(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) out.push_back(sweep_order(n, workers));
  return out;
}

/// Evaluates a graph6 stream (one record per line, optional ">>graph6<<"
/// header). Single consumer; a malformed record aborts the sweep with a
/// ParseError carrying the line number.
inline SweepSummary sweep_stream(std::istream& in) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  bool first = true;
  for_each_graph6(in, [&](const Graph& g, std::size_t) {
    detail::accumulate(summary, g, write_graph6(g));
    if (first) {
      summary.order = g.order();
      first = false;
    } else if (summary.order != g.order()) {
      summary.order = -1;
    }
  });
  std::sort(summary.injective_sum_exceptions.begin(), summary.injective_sum_exceptions.end());
  std::sort(summary.injective_product_exceptions.begin(),
            summary.injective_product_exceptions.end());
  summary.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return summary;
}

}  // namespace ngcolor

#endif  // NGCOLOR_VERIFY_HPP
