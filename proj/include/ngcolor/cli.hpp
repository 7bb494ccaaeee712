#ifndef NGCOLOR_CLI_HPP
#define NGCOLOR_CLI_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngcolor/families.hpp"
#include "ngcolor/io.hpp"
#include "ngcolor/report.hpp"
#include "ngcolor/verify.hpp"

namespace ngcolor::cli {

// Distinct exit codes per failure class.
constexpr int exit_ok = 0;
constexpr int exit_violations = 1;  // sweep found a bound violation
constexpr int exit_usage = 2;       // unknown flag / bad arguments
constexpr int exit_io = 3;          // unreadable input or unwritable output
constexpr int exit_parse = 4;       // malformed graph record

namespace detail {

struct CliError {
  int code;
  std::string message;
};

inline std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string read_input(const std::string& path, std::istream& fallback) {
  if (path.empty() || path == "-") return slurp(fallback);
  std::ifstream file(path);
  if (!file) throw CliError{exit_io, "cannot open input file '" + path + "'"};
  return slurp(file);
}

inline std::vector<Graph> load_graphs(const std::string& text, const std::string& format) {
  if (format == "edges") return {parse_edge_list(text)};
  std::istringstream in(text);
  return read_graph6_lines(in);
}

inline VariantKind variant_from_name(const std::string& name) {
  if (name == "proper") return VariantKind::proper;
  if (name == "two-proper") return VariantKind::two_proper;
  if (name == "injective") return VariantKind::injective;
  return VariantKind::square;
}

inline const char* variant_field(const std::string& name) {
  if (name == "proper") return "chi";
  if (name == "two-proper") return "chi2";
  if (name == "injective") return "chi_i";
  return "chi_sq";
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw CliError{exit_io, "cannot open output file '" + path + "'"};
  file << text;
}

inline std::vector<int> parse_int_params(const std::vector<std::string>& raw) {
  std::vector<int> params;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string token = item.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!token.empty()) {
        try {
          std::size_t used = 0;
          const int value = std::stoi(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
          params.push_back(value);
        } catch (const std::exception&) {
          throw CliError{exit_usage, "family parameter '" + token + "' is not an integer"};
        }
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return params;
}

}  // namespace detail

/// Runs the command line given argv-style arguments (program name excluded).
/// Reads `in` when no input file is given; all regular output goes to `out`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact 2-proper / injective / square chromatic parameters and "
               "complement-bound verification"};
  app.name("ngcolor");
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Parameter profile and bound checks per graph");
  std::vector<std::string> g6_records;
  std::string input_path, format = "g6", variant = "all";
  bool want_all = false, as_json = false;
  compute->add_option("--g6", g6_records, "inline graph6 record (repeatable)");
  compute->add_option("--input", input_path, "input file, '-' for stdin (default)");
  compute->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"g6", "edges"}));
  compute->add_option("--variant", variant, "which chromatic variant to report")
      ->check(CLI::IsMember({"proper", "two-proper", "injective", "square", "all"}));
  compute->add_flag("--all", want_all, "report all variants plus bound checks");
  compute->add_flag("--json", as_json, "machine-readable output");

  auto* construct = app.add_subcommand("construct", "Build a named graph family");
  std::string family_name_arg, output_path;
  std::vector<std::string> family_params;
  bool to_dot = false, to_g6 = false, to_edges = false;
  construct->add_option("family", family_name_arg, "family name")->required();
  construct->add_option("params", family_params, "integer parameters (commas allowed)");
  construct->add_flag("--g6", to_g6, "emit graph6 (default)");
  construct->add_flag("--dot", to_dot, "emit DOT with family vertex labels");
  construct->add_flag("--edges", to_edges, "emit edge-list text");
  construct->add_option("--output", output_path, "output file, '-' for stdout (default)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Check every graph from a source; exit 1 on any violation");
  int order = 0, workers = 0;
  std::string orders_range, stream_path;
  bool sweep_json = false;
  sweep_cmd->add_option("--order", order, "single order, exhaustive labeled enumeration");
  sweep_cmd->add_option("--orders", orders_range, "order range A-B");
  sweep_cmd->add_option("--stream", stream_path, "graph6 stream file, '-' for stdin");
  sweep_cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
  sweep_cmd->add_flag("--json", sweep_json, "machine-readable output");

  auto* convert = app.add_subcommand("convert", "Transcode between edge-list, graph6 and DOT");
  std::string from = "g6", to = "g6", conv_in, conv_out;
  convert->add_option("--from", from, "input format")->check(CLI::IsMember({"g6", "edges"}));
  convert->add_option("--to", to, "output format")->check(CLI::IsMember({"g6", "edges", "dot"}));
  convert->add_option("--input", conv_in, "input file, '-' for stdin (default)");
  convert->add_option("--output", conv_out, "output file, '-' for stdout (default)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ngcolor");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (compute->parsed()) {
      if (want_all) variant = "all";
      std::vector<std::pair<std::string, Graph>> inputs;
      if (!g6_records.empty()) {
        for (const auto& rec : g6_records) inputs.emplace_back(rec, parse_graph6(rec));
      } else {
        for (const auto& g : detail::load_graphs(detail::read_input(input_path, in), format))
          inputs.emplace_back(write_graph6(g), g);
      }
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& [g6, g] : inputs) {
        if (variant == "all") {
          const ParameterProfile profile = evaluate_graph(g);
          const TheoremReport report = check_theorems(profile);
          if (as_json) {
            nlohmann::json entry = to_json(profile);
            entry["g6"] = g6;
            entry["checks"] = to_json(report);
            doc.push_back(entry);
          } else {
            out << profile_line(g6, profile) << "\n";
            for (const auto& r : report.checks) out << check_line(r) << "\n";
          }
        } else {
          const VariantKind kind = detail::variant_from_name(variant);
          const int value = variant_chromatic(g, kind).value;
          const int co_value = variant_chromatic(g.complement(), kind).value;
          const char* field = detail::variant_field(variant);
          if (as_json) {
            doc.push_back({{"g6", g6},
                           {"n", g.order()},
                           {field, value},
                           {std::string("co_") + field, co_value}});
          } else {
            out << "profile g6=" << g6 << " n=" << g.order() << " " << field << "=" << value
                << " co_" << field << "=" << co_value << "\n";
          }
        }
      }
      if (as_json) out << doc.dump(2) << "\n";
      return exit_ok;
    }

    if (construct->parsed()) {
      if (to_dot + to_g6 + to_edges > 1)
        throw detail::CliError{exit_usage, "choose at most one of --g6/--dot/--edges"};
      const FamilySpec spec = parse_family(family_name_arg, detail::parse_int_params(family_params));
      const Graph g = build(spec);
      std::string text;
      if (to_dot) {
        const auto labels = vertex_labels(spec);
        text = export_dot(g, labels);
      } else if (to_edges) {
        text = write_edge_list(g);
      } else {
        text = write_graph6(g) + "\n";
      }
      detail::write_output(output_path, text, out);
      return exit_ok;
    }

    if (sweep_cmd->parsed()) {
      const int sources = (order > 0) + !orders_range.empty() + !stream_path.empty();
      if (sources != 1)
        throw detail::CliError{exit_usage, "choose exactly one of --order/--orders/--stream"};
      std::vector<SweepSummary> summaries;
      if (order > 0) {
        summaries.push_back(sweep_order(order, workers));
      } else if (!orders_range.empty()) {
        const auto dash = orders_range.find('-');
        if (dash == std::string::npos)
          throw detail::CliError{exit_usage, "--orders expects A-B"};
        try {
          summaries = sweep_orders(std::stoi(orders_range.substr(0, dash)),
                                   std::stoi(orders_range.substr(dash + 1)), workers);
        } catch (const std::out_of_range&) {
          throw;
        } catch (const std::invalid_argument&) {
          throw detail::CliError{exit_usage, "--orders expects integer bounds A-B"};
        }
      } else {
        const std::string text = detail::read_input(stream_path, in);
        std::istringstream stream(text);
        summaries.push_back(sweep_stream(stream));
      }
      std::uint64_t violations = 0;
      if (sweep_json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& s : summaries) doc.push_back(to_json(s));
        out << doc.dump(2) << "\n";
      }
      for (const auto& s : summaries) {
        if (!sweep_json) print_sweep(out, s);
        violations += total_violations(s);
      }
      return violations == 0 ? exit_ok : exit_violations;
    }

    if (convert->parsed()) {
      const auto graphs = detail::load_graphs(detail::read_input(conv_in, in), from);
      std::string text;
      for (const auto& g : graphs) {
        if (to == "g6")
          text += write_graph6(g) + "\n";
        else if (to == "edges")
          text += write_edge_list(g);
        else
          text += export_dot(g);
      }
      detail::write_output(conv_out, text, out);
      return exit_ok;
    }
  } catch (const detail::CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const UnsupportedFormatError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace ngcolor::cli

#endif  // NGCOLOR_CLI_HPP
