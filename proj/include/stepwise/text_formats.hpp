#pragma once

#include <charconv>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stepwise/errors.hpp"
#include "stepwise/graph.hpp"

namespace stepwise {

namespace detail {

inline FormatError line_error(std::size_t lineno, const std::string& what) {
  return FormatError("line " + std::to_string(lineno) + ": " + what, lineno);
}

}  // namespace detail

/// DOT text with one node line per vertex and one `u -- v` line per edge,
/// both in ascending vertex order.
inline std::string dot_export(const Graph& g,
                              const std::optional<std::vector<std::string>>& labels = std::nullopt,
                              std::string_view name = "G") {
  if (labels && labels->size() != g.order())
    throw std::invalid_argument("dot_export: label count does not match vertex count");
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (labels) {
      out << " [label=\"";
      for (char c : (*labels)[v]) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
      }
      out << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

/// Degree of each vertex as text; the usual label set for DOT output.
inline std::vector<std::string> degree_labels(const Graph& g) {
  std::vector<std::string> out;
  out.reserve(g.order());
  for (auto d : g.degrees()) out.push_back(std::to_string(d));
  return out;
}

/// Reads the DOT subset written by dot_export: numeric node ids, `--` edges.
/// The vertex count is one past the largest id mentioned.
inline Graph dot_parse(std::string_view text) {
  static const std::regex node_re(R"(^\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  static const std::regex open_re(R"(^\s*(strict\s+)?graph\b.*\{\s*$)");
  static const std::regex skip_re(R"(^\s*(\}|//.*|#.*|(node|edge|graph)\s*\[.*\]\s*;?)?\s*$)");

  std::size_t n = 0;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool opened = false;
  std::smatch m;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!opened) {
      if (std::regex_match(line, open_re)) {
        opened = true;
        continue;
      }
      if (std::regex_match(line, skip_re)) continue;
      throw detail::line_error(lineno, "dot: expected 'graph ... {'");
    }
    if (std::regex_match(line, m, edge_re)) {
      auto u = static_cast<Vertex>(std::stoul(m[1]));
      auto v = static_cast<Vertex>(std::stoul(m[2]));
      n = std::max<std::size_t>({n, std::size_t{u} + 1, std::size_t{v} + 1});
      edges.emplace_back(u, v);
    } else if (std::regex_match(line, m, node_re)) {
      n = std::max<std::size_t>(n, std::stoul(m[1]) + 1);
    } else if (!std::regex_match(line, skip_re)) {
      throw detail::line_error(lineno, "dot: unrecognized line");
    }
  }
  if (!opened) throw detail::line_error(lineno, "dot: no graph block");
  try {
    return Graph::from_edges(n, edges);
  } catch (const InvalidGraph& e) {
    throw detail::line_error(lineno, std::string("dot: ") + e.what());
  }
}

/// Edge list: header line `n m`, then m lines `u v`. Lines starting with
/// '#' and blank lines are ignored.
inline std::string edge_list_export(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph edge_list_parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::size_t a = 0, b = 0;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest)) {
      throw detail::line_error(lineno, "edge list: expected two integers");
    }
    if (!header) {
      header.emplace(a, b);
    } else {
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!header) throw detail::line_error(lineno, "edge list: missing 'n m' header");
  if (edges.size() != header->second) {
    throw detail::line_error(lineno, "edge list: header declares " + std::to_string(header->second) +
                                         " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(header->first, edges);
  } catch (const InvalidGraph& e) {
    throw detail::line_error(lineno, std::string("edge list: ") + e.what());
  }
}

}  // namespace stepwise
