#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stepwise/errors.hpp"

namespace stepwise {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices [0, n).
///
/// Adjacency is kept twice: as sorted neighbor lists (CSR) for traversal and
/// as one bitset row per vertex for O(1) adjacency tests. Rows are a single
/// 64-bit word when n <= 64, which is the case the enumeration core lives in.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph with exactly the given edges. Rejects self-loops,
  /// duplicate edges (in either orientation) and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.bits_.assign(n * g.words_, 0);
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u >= n || v >= n) {
        throw InvalidGraph("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                           std::to_string(v) + "): vertex out of range for n = " +
                           std::to_string(n));
      }
      if (u == v) {
        throw InvalidGraph("edge " + std::to_string(i) + ": self-loop at vertex " +
                           std::to_string(u));
      }
      if (g.test_bit(u, v)) {
        throw InvalidGraph("edge " + std::to_string(i) + ": duplicate edge (" +
                           std::to_string(u) + "," + std::to_string(v) + ")");
      }
      g.set_bit(u, v);
      g.set_bit(v, u);
      ++deg[u];
      ++deg[v];
    }
    g.m_ = edges.size();
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.resize(g.offsets_[n]);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t at = g.offsets_[v];
      for (std::size_t w = 0; w < g.words_; ++w) {
        std::uint64_t word = g.bits_[v * g.words_ + w];
        while (word) {
          g.targets_[at++] = static_cast<Vertex>(w * 64 + std::countr_zero(word));
          word &= word - 1;
        }
      }
    }
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// n(G)
  std::size_t order() const noexcept { return n_; }
  /// m(G)
  std::size_t size() const noexcept { return m_; }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return test_bit(u, v);
  }

  /// Edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(n_);
    for (Vertex v = 0; v < n_; ++v) out[v] = offsets_[v + 1] - offsets_[v];
    return out;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
    return best;
  }

  std::size_t min_degree() const {
    if (n_ == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, offsets_[v + 1] - offsets_[v]);
    return best;
  }

  /// Single-word adjacency row; only valid for n <= 64.
  std::uint64_t row_mask(Vertex v) const {
    check_vertex(v);
    if (words_ != 1) throw LimitExceeded("row_mask requires n <= 64");
    return bits_[v];
  }

  /// Labeled equality: same order and same edge set under identical labels.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " +
                              std::to_string(n_));
    }
  }
  bool test_bit(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

inline Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// Marker for vertices not reachable from the BFS source.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex src) {
  if (src >= g.order()) {
    throw std::out_of_range("bfs source " + std::to_string(src) + " out of range");
  }
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> frontier{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex u = frontier[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

struct MetricSummary {
  std::vector<std::size_t> eccentricities;
  std::size_t diameter = 0;
  std::size_t radius = 0;
  std::vector<std::uint64_t> transmissions;
  std::uint64_t wiener = 0;
  bool is_2_self_centered = false;
};

/// All-pairs BFS. Throws NotConnected on disconnected input.
inline MetricSummary metric_summary(const Graph& g) {
  const std::size_t n = g.order();
  MetricSummary out;
  out.eccentricities.resize(n);
  out.transmissions.resize(n);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    std::size_t ecc = 0;
    std::uint64_t tr = 0;
    for (std::size_t d : dist) {
      if (d == kUnreachable) throw NotConnected();
      ecc = std::max(ecc, d);
      tr += d;
    }
    out.eccentricities[v] = ecc;
    out.transmissions[v] = tr;
    total += tr;
  }
  if (n > 0) {
    out.diameter = *std::max_element(out.eccentricities.begin(), out.eccentricities.end());
    out.radius = *std::min_element(out.eccentricities.begin(), out.eccentricities.end());
  }
  out.wiener = total / 2;
  out.is_2_self_centered =
      n > 0 && std::all_of(out.eccentricities.begin(), out.eccentricities.end(),
                           [](std::size_t e) { return e == 2; });
  return out;
}

inline std::size_t diameter(const Graph& g) { return metric_summary(g).diameter; }

struct BipartitionResult {
  bool is_bipartite = false;
  /// side[v] in {0, 1}; empty when not bipartite.
  std::vector<std::uint8_t> side;
  /// parts[0] = X, parts[1] = Y (ascending vertex order).
  std::vector<Vertex> parts[2];
  /// Index into `parts` of the part holding the lowest-numbered vertex of
  /// maximum degree.
  int part_with_max_degree = 0;
};

/// BFS 2-coloring; each component's lowest vertex is colored 0.
inline BipartitionResult bipartition(const Graph& g) {
  const std::size_t n = g.order();
  BipartitionResult out;
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return out;
        }
      }
    }
  }
  out.is_bipartite = true;
  out.side.resize(n);
  std::size_t best_deg = 0;
  std::optional<Vertex> best;
  for (Vertex v = 0; v < n; ++v) {
    out.side[v] = static_cast<std::uint8_t>(color[v]);
    out.parts[color[v]].push_back(v);
    if (!best || g.degree(v) > best_deg) {
      best = v;
      best_deg = g.degree(v);
    }
  }
  if (best) out.part_with_max_degree = color[*best];
  return out;
}

enum class Cyclicity { tree, unicyclic, other };

inline const char* to_string(Cyclicity c) {
  switch (c) {
    case Cyclicity::tree: return "tree";
    case Cyclicity::unicyclic: return "unicyclic";
    case Cyclicity::other: return "other";
  }
  return "?";
}

inline Cyclicity classify_cyclicity(const Graph& g) {
  if (!is_connected(g)) throw NotConnected("classify_cyclicity requires a connected graph");
  if (g.size() + 1 == g.order()) return Cyclicity::tree;
  if (g.size() == g.order()) return Cyclicity::unicyclic;
  return Cyclicity::other;
}

}  // namespace stepwise
