// Minimal library walkthrough: build a family, compute its parameter
// profile, check the complement bounds, and print the graph as DOT.

#include <iostream>

#include "ngcolor/families.hpp"
#include "ngcolor/io.hpp"
#include "ngcolor/report.hpp"
#include "ngcolor/verify.hpp"

int main() {
  using namespace ngcolor;

  const FamilySpec spec = FamilySpec::f_square(7);
  const Graph g = build(spec);

  std::cout << "graph6: " << write_graph6(g) << "\n";

  const ParameterProfile profile = evaluate_graph(g);
  std::cout << profile_line(write_graph6(g), profile) << "\n";

  const TheoremReport report = check_theorems(profile);
  for (const CheckResult& r : report.checks)
    if (r.applicable) std::cout << check_line(r) << "\n";

  std::cout << export_dot(g, vertex_labels(spec));
  return 0;
}
