#ifndef NGCOLOR_REPORT_HPP
#define NGCOLOR_REPORT_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "ngcolor/verify.hpp"

namespace ngcolor {

// Line-oriented structured text. Field names are stable and documented in
// the README:
//   profile g6=<g6> n=<n> chi=.. chi2=.. chi_i=.. chi_sq=.. co_chi=.. ...
//   check=<ID> applicable=<bool> holds=<bool> slack=<int> extremal=<bool>
//   check=<ID> applicable=<count> violations=<count> extremal=<count> witness=<g6|->

inline std::string profile_line(const std::string& g6, const ParameterProfile& p) {
  auto side = [](const char* prefix, const ParameterValues& v) {
    std::string s;
    s += std::string(" ") + prefix + "chi=" + std::to_string(v.chi);
    s += std::string(" ") + prefix + "chi2=" + std::to_string(v.chi_two);
    s += std::string(" ") + prefix + "chi_i=" + std::to_string(v.chi_injective);
    s += std::string(" ") + prefix + "chi_sq=" + std::to_string(v.chi_square);
    return s;
  };
  return "profile g6=" + g6 + " n=" + std::to_string(p.order) + side("", p.graph_side) +
         side("co_", p.complement_side);
}

inline std::string check_line(const CheckResult& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::string("check=") + std::string(check_name(r.id)) +
         " applicable=" + b(r.applicable) + " holds=" + b(r.holds) +
         " slack=" + std::to_string(r.slack) + " extremal=" + b(r.is_extremal);
}

inline std::string sweep_check_line(CheckId id, const CheckStats& c) {
  return std::string("check=") + std::string(check_name(id)) +
         " applicable=" + std::to_string(c.applicable) +
         " violations=" + std::to_string(c.violations) +
         " extremal=" + std::to_string(c.extremal) +
         " witness=" + (c.extremal_witness.empty() ? "-" : c.extremal_witness);
}

inline void print_sweep(std::ostream& out, const SweepSummary& s) {
  out << "order " << (s.order < 0 ? std::string("mixed") : std::to_string(s.order)) << ": "
      << s.graph_count << " graphs, " << total_violations(s) << " violations ("
      << s.elapsed_ms << " ms)\n";
  for (std::size_t i = 0; i < all_checks.size(); ++i)
    out << sweep_check_line(all_checks[i], s.checks[i]) << "\n";
  auto list = [&](const char* label, const std::vector<std::string>& xs) {
    if (xs.empty()) return;
    out << label;
    for (const auto& x : xs) out << " " << x;
    out << "\n";
  };
  list("exceptions inj-sum:", s.injective_sum_exceptions);
  list("exceptions inj-prod:", s.injective_product_exceptions);
}

inline nlohmann::json to_json(const ParameterProfile& p) {
  auto side = [](const ParameterValues& v) {
    return nlohmann::json{{"chi", v.chi},
                          {"chi2", v.chi_two},
                          {"chi_i", v.chi_injective},
                          {"chi_sq", v.chi_square}};
  };
  return {{"n", p.order}, {"graph", side(p.graph_side)}, {"complement", side(p.complement_side)}};
}

inline nlohmann::json to_json(const CheckResult& r) {
  return {{"id", std::string(check_name(r.id))},
          {"applicable", r.applicable},
          {"holds", r.holds},
          {"slack", r.slack},
          {"extremal", r.is_extremal}};
}

inline nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : report.checks) checks.push_back(to_json(r));
  return checks;
}

inline nlohmann::json to_json(const SweepSummary& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (std::size_t i = 0; i < all_checks.size(); ++i) {
    const auto& c = s.checks[i];
    checks.push_back({{"id", std::string(check_name(all_checks[i]))},
                      {"applicable", c.applicable},
                      {"violations", c.violations},
                      {"extremal", c.extremal},
                      {"extremal_witness", c.extremal_witness},
                      {"violation_witness", c.violation_witness}});
  }
  return {{"order", s.order},
          {"graphs", s.graph_count},
          {"violations", total_violations(s)},
          {"elapsed_ms", s.elapsed_ms},
          {"checks", checks},
          {"injective_sum_exceptions", s.injective_sum_exceptions},
          {"injective_product_exceptions", s.injective_product_exceptions}};
}

}  // namespace ngcolor

#endif  // NGCOLOR_REPORT_HPP
