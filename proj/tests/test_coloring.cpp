#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ngcolor/coloring.hpp"
#include "ngcolor/families.hpp"
#include "ngcolor/verify.hpp"
#include "oracle.hpp"

using namespace ngcolor;

namespace {

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

void require_valid(const Graph& g, const ColoringResult& r) {
  REQUIRE(is_valid_coloring(g, r.assignment, r.value));
  if (g.order() == 0) {
    REQUIRE(r.assignment.empty());
    return;
  }
  std::uint64_t used = 0;
  for (int c : r.assignment) used |= std::uint64_t{1} << c;
  REQUIRE(std::popcount(used) == r.value);
}

}  // namespace

TEST_CASE("chromatic number on named graphs") {
  CHECK(chromatic_number(build(FamilySpec::complete(4))).value == 4);
  CHECK(chromatic_number(build(FamilySpec::cycle(5))).value == 3);
  const Graph p = petersen();
  CHECK(chromatic_number(p).value == 3);
  CHECK(oracle::brute_force_chromatic(p) == 3);
  require_valid(p, chromatic_number(p));
}

TEST_CASE("chromatic number is deterministic") {
  const Graph g = build(FamilySpec::h_odd(6));
  const ColoringResult a = chromatic_number(g);
  const ColoringResult b = chromatic_number(g);
  CHECK(a.value == b.value);
  CHECK(a.assignment == b.assignment);
}

TEST_CASE("solver agrees with plain brute force on every graph up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphs(n).for_each([](const Graph& g) {
      const ColoringResult r = chromatic_number(g);
      REQUIRE(r.value == oracle::brute_force_chromatic(g));
      REQUIRE(is_valid_coloring(g, r.assignment, r.value));
    });
  }
}

TEST_CASE("max clique size") {
  CHECK(max_clique_size(build(FamilySpec::complete(5))) == 5);
  CHECK(max_clique_size(build(FamilySpec::cycle(5))) == 2);
  const Graph co_c7 = build(FamilySpec::cycle(7)).complement();
  CHECK(max_clique_size(co_c7) == 3);
  CHECK(oracle::brute_force_clique(co_c7) == 3);

  for (int n = 1; n <= 5; ++n)
    LabeledGraphs(n).for_each(
        [](const Graph& g) { REQUIRE(max_clique_size(g) == oracle::brute_force_clique(g)); });
}

TEST_CASE("greedy upper bound") {
  CHECK(greedy_upper_bound(Graph(5)) == 1);
  CHECK(greedy_upper_bound(build(FamilySpec::complete(4))) == 4);
  CHECK(greedy_upper_bound(build(FamilySpec::path(4))) == 2);
}

TEST_CASE("omega <= chi <= greedy <= max degree + 1, all graphs up to order 5") {
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphs(n).for_each([](const Graph& g) {
      const int omega = max_clique_size(g);
      const int chi = chromatic_number(g).value;
      const int greedy = greedy_upper_bound(g);
      REQUIRE(omega <= chi);
      REQUIRE(chi <= greedy);
      REQUIRE(greedy <= degree_stats(g).max_degree + 1);
    });
  }
}

TEST_CASE("variant chromatic numbers on named graphs") {
  CHECK(variant_chromatic(build(FamilySpec::complete_bipartite(3, 2)), VariantKind::two_proper).value == 3);
  CHECK(variant_chromatic(build(FamilySpec::complete(7)), VariantKind::two_proper).value == 1);
  CHECK(variant_chromatic(build(FamilySpec::cycle(4)), VariantKind::injective).value == 2);
  CHECK(variant_chromatic(build(FamilySpec::cycle(5)), VariantKind::square).value == 5);
  CHECK(variant_chromatic(petersen(), VariantKind::proper).value == 3);
}

TEST_CASE("variant equals chi of the derived graph and certificates replay") {
  const VariantKind kinds[] = {VariantKind::proper, VariantKind::two_proper,
                               VariantKind::injective, VariantKind::square};
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphs(n).for_each([&](const Graph& g) {
      for (VariantKind kind : kinds) {
        const Graph target =
            kind == VariantKind::proper ? g : derived_graph(g, derived_kind_for(kind));
        const ColoringResult r = variant_chromatic(g, kind);
        REQUIRE(r.value == chromatic_number(target).value);
        REQUIRE(is_valid_coloring(target, r.assignment, r.value));
      }
    });
  }
}

TEST_CASE("variant chain chi2 <= chi_i <= chi_sq and chi <= chi_sq, orders up to 5") {
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphs(n).for_each([](const Graph& g) {
      const int chi = chromatic_number(g).value;
      const int chi2 = variant_chromatic(g, VariantKind::two_proper).value;
      const int chi_i = variant_chromatic(g, VariantKind::injective).value;
      const int chi_sq = variant_chromatic(g, VariantKind::square).value;
      REQUIRE(chi2 <= chi_i);
      REQUIRE(chi_i <= chi_sq);
      REQUIRE(chi <= chi_sq);
      REQUIRE(chi_i >= degree_stats(g).max_degree);
    });
  }
}

TEST_CASE("order 0 and order 1 conventions") {
  const ColoringResult zero = chromatic_number(Graph(0));
  CHECK(zero.value == 0);
  CHECK(zero.assignment.empty());
  CHECK(max_clique_size(Graph(0)) == 0);
  CHECK(greedy_upper_bound(Graph(0)) == 0);

  for (VariantKind kind : {VariantKind::proper, VariantKind::two_proper,
                           VariantKind::injective, VariantKind::square}) {
    CHECK(variant_chromatic(Graph(0), kind).value == 0);
    CHECK(variant_chromatic(Graph(1), kind).value == 1);
  }
}
