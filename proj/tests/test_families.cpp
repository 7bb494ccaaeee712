#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ngcolor/coloring.hpp"
#include "ngcolor/families.hpp"
#include "ngcolor/io.hpp"
#include "ngcolor/verify.hpp"

using namespace ngcolor;

namespace {

int chi2(const Graph& g) { return variant_chromatic(g, VariantKind::two_proper).value; }
int chi_inj(const Graph& g) { return variant_chromatic(g, VariantKind::injective).value; }

}  // namespace

TEST_CASE("standard families") {
  CHECK(build(FamilySpec::path(1)) == Graph(1));
  CHECK(build(FamilySpec::path(4)).edge_count() == 3);
  CHECK(build(FamilySpec::cycle(3)) == build(FamilySpec::complete(3)));
  CHECK(build(FamilySpec::empty(4)) == Graph(4));
  CHECK(build(FamilySpec::complete(5)).edge_count() == 10);
  CHECK(build(FamilySpec::complete_bipartite(3, 2)).edge_count() == 6);
}

TEST_CASE("parameters below the stated minimum are rejected") {
  CHECK_THROWS_AS(FamilySpec::h_graph(5), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::h_odd(5), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::h_even(5), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::f_square(4), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::g_injective(8), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::cycle(2), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::path(-1), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::complete_bipartite(0, 3), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::complete_multipartite({}), std::out_of_range);
  CHECK_THROWS_AS(FamilySpec::complete_multipartite({2, 0}), std::out_of_range);
}

TEST_CASE("complete multipartite") {
  const Graph g = build(FamilySpec::complete_multipartite({3, 2, 1}));
  CHECK(g.order() == 6);
  CHECK(chi2(g) == 3);
  CHECK(write_graph6(g) == "EFzw");

  // part lists normalize to descending order
  const FamilySpec spec = FamilySpec::complete_multipartite({1, 3, 2});
  CHECK(spec.params == std::vector<int>{3, 2, 1});
  CHECK(build(spec).order() == 6);

  // single part: no cross edges at all
  CHECK(build(FamilySpec::complete_multipartite({4})) == Graph(4));

  // chi2 equals the largest part across a small grid of part lists
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= a; ++b) {
      CHECK(chi2(build(FamilySpec::complete_multipartite({a, b}))) == a);
      for (int c = 1; c <= b; ++c)
        CHECK(chi2(build(FamilySpec::complete_multipartite({a, b, c}))) == a);
    }
}

TEST_CASE("h-graph structure") {
  const int k = 6;
  const Graph h = build(FamilySpec::h_graph(k));
  CHECK(h.order() == 2 * k);
  CHECK(write_graph6(h) == "K??CmTfkyvd~");

  // X = 0..k-1 independent, Y = k..2k-1 a clique
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      CHECK_FALSE(h.adjacent(i, j));
      CHECK(h.adjacent(k + i, k + j));
    }
  // each x_i has exactly floor(k/2) neighbors, all in Y
  for (int i = 0; i < k; ++i) CHECK(h.degree(i) == k / 2);
  CHECK(h.adjacent(0, k + 0));
  CHECK(h.adjacent(0, k + 1));
  CHECK_FALSE(h.adjacent(0, k + 2));  // the skipped y_{i + floor(k/2) - 1}
  CHECK(h.adjacent(0, k + 3));

  // every x-pair is at distance exactly 2
  const DistanceMatrix d = distance_matrix(h);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) CHECK(d.at(i, j) == 2);
}

TEST_CASE("even k: the complement of h-graph has the same parameter profile") {
  for (int k : {6, 8}) {
    const ParameterProfile p = evaluate_graph(build(FamilySpec::h_graph(k)));
    CHECK(p.graph_side == p.complement_side);
    CHECK(p.graph_side.chi_two == k);
  }
}

TEST_CASE("h-odd and h-even hit the 2-proper sum bound") {
  // individual values frozen from the exact solver
  const Graph odd6 = build(FamilySpec::h_odd(6));
  CHECK(odd6.order() == 13);
  CHECK(write_graph6(odd6) == "L??CmTfkyvd~?~");
  CHECK(chi2(odd6) == 7);
  CHECK(chi2(odd6.complement()) == 7);  // sum 14 = 2k+2 = order+1

  const Graph even6 = build(FamilySpec::h_even(6));
  CHECK(even6.order() == 14);
  CHECK(write_graph6(even6) == "M??CmTfkyvd~?~?~?");
  CHECK_FALSE(even6.adjacent(12, 13));  // appended vertices stay independent
  CHECK(chi2(even6) == 8);
  CHECK(chi2(even6.complement()) == 7);  // sum 15 = 2k+3 = order+1

  for (const Graph& g : {odd6, even6}) {
    const TheoremReport report = check_theorems(evaluate_graph(g));
    CHECK(report.check(CheckId::twoprop_sum).holds);
    CHECK(report.check(CheckId::twoprop_sum).is_extremal);
  }
}

TEST_CASE("g-injective: any two vertices share a neighbor on both sides") {
  const Graph g = build(FamilySpec::g_injective(9));
  CHECK(g.order() == 9);
  CHECK(write_graph6(g) == "H{S{aSf");
  for (const Graph& side : {g, g.complement()}) {
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        CHECK((side.neighbors(u) & side.neighbors(v)) != 0);
  }
  CHECK(chi_inj(g) == 9);
  CHECK(chi_inj(g.complement()) == 9);

  const Graph g11 = build(FamilySpec::g_injective(11));
  CHECK_FALSE(g11.adjacent(9, 10));  // the two appended vertices are non-adjacent
  const TheoremReport report = check_theorems(evaluate_graph(g11));
  CHECK(report.check(CheckId::inj_sum).is_extremal);   // sum = 2n
  CHECK(report.check(CheckId::inj_prod).is_extremal);  // product = n^2
}

TEST_CASE("f-square: order 5 degenerates to the plain 5-cycle") {
  CHECK(build(FamilySpec::f_square(5)) == build(FamilySpec::cycle(5)));
}

TEST_CASE("f-square hits the square-coloring upper bounds") {
  const Graph f7 = build(FamilySpec::f_square(7));
  CHECK(write_graph6(f7) == "Fhed?");
  for (int y = 5; y < 7; ++y) {
    CHECK(f7.adjacent(y, 0));
    CHECK(f7.adjacent(y, 2));
    CHECK(f7.degree(y) == 2);
  }
  CHECK(variant_chromatic(f7, VariantKind::square).value == 7);
  CHECK(variant_chromatic(f7.complement(), VariantKind::square).value == 7);

  const TheoremReport report = check_theorems(evaluate_graph(f7));
  CHECK(report.check(CheckId::sq_sum).is_extremal);   // sum = 2n
  CHECK(report.check(CheckId::sq_prod).is_extremal);  // product = n^2
}

TEST_CASE("vertex labels match the documented layouts") {
  const auto h = vertex_labels(FamilySpec::h_odd(6));
  REQUIRE(h.size() == 13);
  CHECK(h.front() == "x0");
  CHECK(h[6] == "y0");
  CHECK(h.back() == "inf");

  const auto f = vertex_labels(FamilySpec::f_square(7));
  REQUIRE(f.size() == 7);
  CHECK(f[0] == "x1");
  CHECK(f[5] == "y1");

  const auto g = vertex_labels(FamilySpec::g_injective(11));
  REQUIRE(g.size() == 11);
  CHECK(g[0] == "x1");
  CHECK(g[3] == "y1");
  CHECK(g[6] == "z1");
  CHECK(g[9] == "inf1");
  CHECK(g[10] == "inf2");
}

TEST_CASE("family name parsing") {
  CHECK(build(parse_family("f-square", {7})).order() == 7);
  CHECK(build(parse_family("complete-multipartite", {3, 2, 1})).order() == 6);
  CHECK(family_name(Family::h_odd) == "h-odd");
  CHECK_THROWS_AS(parse_family("mystery", {3}), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("path", {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("h-graph", {5}), std::out_of_range);
}
