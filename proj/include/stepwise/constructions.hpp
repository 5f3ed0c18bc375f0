#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stepwise/errors.hpp"
#include "stepwise/graph.hpp"
#include "stepwise/graph6.hpp"
#include "stepwise/ksi.hpp"

namespace stepwise {

/// K_{a,b}; vertices [0, a) form the first part.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite: parts must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  return Graph::from_edges(a + b, edges);
}

namespace detail {

/// Hubs 0..h-1 on a cycle; block i joins hub i and hub (i+1) mod h through
/// block_sizes[i] midpoints, each adjacent to exactly those two hubs.
inline Graph hub_cycle(std::size_t hubs, const std::vector<std::size_t>& block_sizes) {
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(hubs);
  for (std::size_t i = 0; i < hubs; ++i) {
    const auto left = static_cast<Vertex>(i);
    const auto right = static_cast<Vertex>((i + 1) % hubs);
    for (std::size_t j = 0; j < block_sizes[i]; ++j, ++next) {
      edges.emplace_back(left, next);
      edges.emplace_back(right, next);
    }
  }
  return Graph::from_edges(next, edges);
}

}  // namespace detail

/// Gamma_{p,q}: q hubs in cyclic order, p midpoints between each pair of
/// consecutive hubs. n = q(p+1), m = 2pq, hub degree 2p, midpoint degree 2.
inline Graph gamma(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw std::invalid_argument("gamma: requires p >= 2 and q >= 2");
  return detail::hub_cycle(q, std::vector<std::size_t>(q, p));
}

/// H_{p,q}: 2q hubs in cyclic order, alternating blocks of p and 2
/// midpoints. n = 2q + q(p+2), hub degree p+2, midpoint degree 2.
inline Graph h_family(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw std::invalid_argument("h_family: requires p >= 2 and q >= 2");
  std::vector<std::size_t> blocks(2 * q);
  for (std::size_t i = 0; i < 2 * q; ++i) blocks[i] = i % 2 == 0 ? p : 2;
  return detail::hub_cycle(2 * q, blocks);
}

/// G □ H with (g, h) numbered g * n(H) + h.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument("cartesian_product: factors must be nonempty");
  const std::size_t nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(g.size() * nh + g.order() * h.size());
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      const auto self = static_cast<Vertex>(a * nh + b);
      for (Vertex b2 : h.neighbors(b))
        if (b < b2) edges.emplace_back(self, static_cast<Vertex>(a * nh + b2));
      for (Vertex a2 : g.neighbors(a))
        if (a < a2) edges.emplace_back(self, static_cast<Vertex>(a2 * nh + b));
    }
  }
  return Graph::from_edges(g.order() * nh, edges);
}

/// G ∘ K̄_t with (g, j) numbered g * t + j.
inline Graph lexicographic_with_empty(const Graph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("lexicographic_with_empty: t must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(g.size() * t * t);
  for (auto [a, a2] : g.edges())
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t j2 = 0; j2 < t; ++j2)
        edges.emplace_back(static_cast<Vertex>(a * t + j), static_cast<Vertex>(a2 * t + j2));
  return Graph::from_edges(g.order() * t, edges);
}

/// graph6 of the smallest connected 1-SI graph of diameter 3 (the least
/// canonical string among those of minimum order). Found by exhaustive
/// search; the search is rerun in the test suite.
inline constexpr const char* kBase1SiDiameter3Graph6 = "J??yvAoq?N_";

inline Graph base_1si_diameter3() { return graph6_decode(kBase1SiDiameter3Graph6); }

/// A connected k-SI graph of diameter exactly d:
///   d = 2  K_{2,2+k}
///   d = 3  base_1si_diameter3() ∘ K̄_k
///   d >= 4 K_{2,2+k} □ build_k_si_with_diameter(k, d-2)
/// The result is validated before it is returned.
inline Graph build_k_si_with_diameter(std::size_t k, std::size_t d) {
  if (k == 0) throw std::invalid_argument("build_k_si_with_diameter: k must be >= 1");
  if (d < 2) throw std::invalid_argument("build_k_si_with_diameter: d must be >= 2");
  Graph out;
  if (d == 2) {
    out = complete_bipartite(2, 2 + k);
  } else if (d == 3) {
    out = lexicographic_with_empty(base_1si_diameter3(), k);
  } else {
    out = cartesian_product(complete_bipartite(2, 2 + k), build_k_si_with_diameter(k, d - 2));
  }
  if (!is_k_si(out, k) || !is_connected(out) || metric_summary(out).diameter != d) {
    throw std::logic_error("build_k_si_with_diameter: generated graph failed validation for k=" +
                           std::to_string(k) + ", d=" + std::to_string(d));
  }
  return out;
}

}  // namespace stepwise
