#pragma once

// Subcommand bodies for the `stepwise` CLI. Kept apart from argument parsing
// so the tests can drive them with string streams.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stepwise/stepwise.hpp"

namespace stepwise::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInputError = 3, kInternal = 4 };

struct RunConfig {
  std::string input;   // path, "-" for stdin
  std::string family;  // inline family spec
  std::optional<std::size_t> k;
  std::string n_range;
  std::string k_range;
  std::string format = "text";
  std::string from;  // convert: g6 | dot | edges
  std::string to;
  std::string output;  // path, empty for stdout
  std::string summary_csv;
  std::optional<std::size_t> max_n;
  unsigned workers = 1;
};

/// "a..b" or "a" into an inclusive range.
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("bad range '" + text + "'");
    return static_cast<std::size_t>(v);
  };
  if (dots == std::string::npos) {
    auto v = num(text);
    return {v, v};
  }
  auto lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

inline std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Non-empty graph6 lines of a file with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, Graph>> read_graph6_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, Graph>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.emplace_back(lineno, graph6_decode(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

/// Graphs named by --family or read from --in.
inline std::vector<std::pair<std::size_t, Graph>> load_inputs(const RunConfig& cfg) {
  if (!cfg.family.empty()) return {{0, build_validated(parse_family(cfg.family))}};
  if (cfg.input.empty()) throw std::invalid_argument("need --family or --in");
  return read_graph6_lines(read_all(cfg.input));
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = load_inputs(cfg);
  if (cfg.format == "csv") out << kCheckCsvHeader << '\n';
  std::optional<std::string> first_failure;
  std::size_t failed = 0;
  for (const auto& [lineno, g] : graphs) {
    const auto g6 = graph6_encode(g);
    std::optional<std::size_t> k = cfg.k;
    if (!k && g.size() > 0) k = si_step(g);
    std::string problem;
    if (!k) {
      problem = "not stepwise irregular for any k";
    } else if (g.size() == 0 || !is_k_si(g, *k)) {
      problem = "not " + std::to_string(*k) + "-SI";
    } else if (!is_connected(g)) {
      problem = "disconnected";
    }
    if (!problem.empty()) {
      ++failed;
      if (!first_failure) first_failure = g6;
      if (cfg.format == "json") {
        out << nlohmann::json{{"schema", kReportSchemaVersion}, {"graph", g6}, {"error", problem}}.dump()
            << '\n';
      } else if (cfg.format == "csv") {
        out << g6 << ',' << g.order() << ',' << g.size() << ',' << (k ? std::to_string(*k) : "")
            << ",,,,,,,,,0," << problem << '\n';
      } else {
        out << g6 << ": " << problem << '\n';
      }
      continue;
    }
    const auto rep = full_report(g, *k);
    if (!rep.overall) {
      ++failed;
      if (!first_failure) first_failure = g6;
    }
    if (cfg.format == "json") {
      out << to_json(rep).dump() << '\n';
    } else if (cfg.format == "csv") {
      out << csv_row(rep) << '\n';
    } else {
      out << g6 << ": n=" << rep.n << " m=" << rep.m << " k=" << rep.k
          << " cd=" << rep.partition.degree_complexity << " diameter=" << rep.metrics.diameter
          << " wiener=" << rep.metrics.wiener << '\n';
      for (const auto& b : rep.bounds) {
        out << "  " << b.id << ": ";
        if (!b.applicable) {
          out << "not applicable (" << b.not_applicable_reason << ")\n";
          continue;
        }
        out << "actual " << b.actual << " bound " << to_string(b.bound)
            << (b.holds ? " holds" : " VIOLATED") << (b.equality ? ", equality" : "")
            << (b.iff_ok ? "" : ", CHARACTERIZATION MISMATCH") << '\n';
      }
      out << "  " << (rep.overall ? "all checks hold" : "FAILED:");
      for (const auto& f : rep.failures()) out << ' ' << f;
      out << '\n';
    }
  }
  if (first_failure) {
    err << failed << " of " << graphs.size() << " graph(s) failed; first counterexample: "
        << *first_failure << '\n';
    return kCheckFailed;
  }
  return kOk;
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.family.empty()) throw std::invalid_argument("construct needs --family");
  const auto spec = parse_family(cfg.family);
  const auto g = build_validated(spec);
  if (cfg.format == "graph6") {
    out << graph6_encode(g) << '\n';
  } else if (cfg.format == "dot") {
    out << dot_export(g, degree_labels(g));
  } else if (cfg.format == "edges") {
    out << edge_list_export(g);
  } else if (cfg.format == "json" || cfg.format == "text") {
    const auto step = g.size() > 0 ? si_step(g) : std::nullopt;
    const std::optional<std::size_t> diam =
        is_connected(g) ? std::optional<std::size_t>(metric_summary(g).diameter) : std::nullopt;
    if (cfg.format == "json") {
      nlohmann::json j{{"schema", kReportSchemaVersion}, {"family", spec.to_string()},
                       {"graph6", graph6_encode(g)},     {"n", g.order()},
                       {"m", g.size()},                  {"degrees", g.degrees()}};
      j["step"] = step ? nlohmann::json(*step) : nlohmann::json(nullptr);
      j["diameter"] = diam ? nlohmann::json(*diam) : nlohmann::json(nullptr);
      out << j.dump() << '\n';
    } else {
      out << spec.to_string() << ": n=" << g.order() << " m=" << g.size()
          << " step=" << (step ? std::to_string(*step) : "none")
          << " diameter=" << (diam ? std::to_string(*diam) : "inf") << '\n';
    }
  } else {
    throw std::invalid_argument("construct: unknown format '" + cfg.format + "'");
  }
  return kOk;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_range.empty()) throw std::invalid_argument("enumerate needs --n");
  const auto [lo, hi] = parse_range(cfg.n_range);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
    sink = &file;
  }
  std::ostringstream summary;
  summary << "n,k,count,max_delta,max_m\n";
  for (std::size_t n = lo; n <= hi; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.k = cfg.k;
    spec.bipartite_only = cfg.k.has_value();
    spec.workers = cfg.workers;
    spec.max_n = cfg.max_n;
    const auto graphs = collect_graphs(spec);
    std::optional<std::size_t> max_delta, max_m;
    for (const auto& e : graphs) {
      *sink << e.canonical << '\n';
      max_delta = std::max(max_delta.value_or(0), e.graph.max_degree());
      max_m = std::max(max_m.value_or(0), e.graph.size());
    }
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
    err << "# n=" << n << " k=" << (cfg.k ? std::to_string(*cfg.k) : "any")
        << " count=" << graphs.size() << " max_delta=" << opt(max_delta) << " max_m=" << opt(max_m)
        << '\n';
    summary << n << ',' << (cfg.k ? std::to_string(*cfg.k) : "") << ',' << graphs.size() << ','
            << opt(max_delta) << ',' << opt(max_m) << '\n';
  }
  if (!cfg.summary_csv.empty()) {
    std::ofstream s(cfg.summary_csv);
    if (!s) throw std::runtime_error("cannot write '" + cfg.summary_csv + "'");
    s << summary.str();
  }
  return kOk;
}

inline int cmd_survey(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.n_range.empty() || cfg.k_range.empty())
    throw std::invalid_argument("survey needs --n and --k ranges");
  const auto [n_lo, n_hi] = parse_range(cfg.n_range);
  const auto [k_lo, k_hi] = parse_range(cfg.k_range);
  const auto csv = survey_csv(n_lo, n_hi, k_lo, k_hi, cfg.workers, cfg.max_n);
  if (cfg.output.empty()) {
    out << csv;
  } else {
    std::ofstream file(cfg.output);
    if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
    file << csv;
  }
  return kOk;
}

inline std::string format_from_path(const std::string& path) {
  auto ends = [&](const std::string& suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends(".g6") || ends(".graph6")) return "g6";
  if (ends(".dot") || ends(".gv")) return "dot";
  if (ends(".edges") || ends(".txt")) return "edges";
  return "";
}

inline int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.input.empty()) throw std::invalid_argument("convert needs --in");
  const auto from = cfg.from.empty() ? format_from_path(cfg.input) : cfg.from;
  if (from.empty()) throw std::invalid_argument("convert: cannot infer --from for '" + cfg.input + "'");
  const auto text = read_all(cfg.input);
  std::vector<Graph> graphs;
  if (from == "g6") {
    for (auto& [lineno, g] : read_graph6_lines(text)) graphs.push_back(std::move(g));
  } else if (from == "dot") {
    graphs.push_back(dot_parse(text));
  } else if (from == "edges") {
    graphs.push_back(edge_list_parse(text));
  } else {
    throw std::invalid_argument("convert: unknown input format '" + from + "'");
  }
  const auto& to = cfg.to;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (to == "g6") {
      out << graph6_encode(graphs[i]) << '\n';
    } else if (to == "dot") {
      out << dot_export(graphs[i], std::nullopt, "G" + std::to_string(i));
    } else if (to == "edges") {
      out << edge_list_export(graphs[i]);
    } else {
      throw std::invalid_argument("convert: unknown output format '" + to + "'");
    }
  }
  return kOk;
}

/// Runs one subcommand, mapping exceptions to exit codes and diagnostics.
inline int run(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.workers == 0) {
    err << "error: --workers must be >= 1\n";
    return kUsage;
  }
  try {
    if (command == "check") return cmd_check(cfg, out, err);
    if (command == "construct") return cmd_construct(cfg, out, err);
    if (command == "enumerate") return cmd_enumerate(cfg, out, err);
    if (command == "survey") return cmd_survey(cfg, out, err);
    if (command == "convert") return cmd_convert(cfg, out, err);
    err << "error: unknown command '" << command << "'\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace stepwise::cli
