#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "stepwise/canonical.hpp"
#include "stepwise/errors.hpp"
#include "stepwise/graph.hpp"
#include "stepwise/graph6.hpp"

namespace stepwise {

/// Parameters of an isomorph-free exhaustive search.
struct EnumSpec {
  std::size_t n = 1;
  /// Keep only k-SI graphs (with at least one edge).
  std::optional<std::size_t> k;
  bool connected_only = true;
  /// Restrict the whole generation tree to bipartite graphs.
  bool bipartite_only = false;
  /// With k set: cut partial graphs whose edges can no longer reach
  /// imbalance k with the vertices still to come.
  bool degree_gap_prune = true;
  std::optional<std::size_t> max_results;
  unsigned workers = 1;
  /// Ceiling override; falls back to STEPWISE_MAX_N, then the defaults.
  std::optional<std::size_t> max_n;
};

inline constexpr std::size_t kDefaultEnumerationCeiling = 10;
inline constexpr std::size_t kDefaultUnfilteredCeiling = 9;

/// Largest n the enumerator accepts for this spec.
inline std::size_t enumeration_ceiling(const EnumSpec& spec) {
  if (spec.max_n) return std::min(*spec.max_n, kDefaultCanonicalLimit);
  if (const char* env = std::getenv("STEPWISE_MAX_N"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return std::min<std::size_t>(v, kDefaultCanonicalLimit);
  }
  const bool filtered = spec.k.has_value() || spec.bipartite_only;
  return filtered ? kDefaultEnumerationCeiling : kDefaultUnfilteredCeiling;
}

struct EnumeratedGraph {
  /// Canonically labeled representative.
  Graph graph;
  std::string canonical;
  std::uint64_t automorphisms = 1;
};

namespace detail {

struct Candidate {
  std::vector<std::uint64_t> rows;  // canonical rows
  std::uint64_t automorphisms = 1;
};

inline bool rows_bipartite(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  std::uint64_t seen = 0, side1 = 0;
  std::uint64_t queue[kMaxCanonicalOrder];
  for (std::size_t root = 0; root < n; ++root) {
    if ((seen >> root) & 1u) continue;
    seen |= std::uint64_t{1} << root;
    std::size_t head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const auto u = queue[head++];
      const bool u1 = (side1 >> u) & 1u;
      for (std::uint64_t r = rows[u]; r; r &= r - 1) {
        const auto w = static_cast<std::uint64_t>(std::countr_zero(r));
        if ((seen >> w) & 1u) {
          if ((((side1 >> w) & 1u) != 0) == u1) return false;
        } else {
          seen |= std::uint64_t{1} << w;
          if (!u1) side1 |= std::uint64_t{1} << w;
          queue[tail++] = w;
        }
      }
    }
  }
  return true;
}

inline bool rows_connected(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

/// Every edge can still end with imbalance exactly k once `remaining`
/// further vertices are added (each adds at most one to any degree).
inline bool gap_feasible(std::span<const std::uint64_t> rows, std::size_t k, std::size_t remaining) {
  const auto kk = static_cast<long>(k);
  const auto r = static_cast<long>(remaining);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    const long du = std::popcount(rows[u]);
    for (std::uint64_t m = rows[u] >> u >> 1; m; m &= m - 1) {
      const auto v = u + 1 + static_cast<std::size_t>(std::countr_zero(m));
      const long diff = du - std::popcount(rows[v]);
      if (std::labs(diff - kk) > r && std::labs(diff + kk) > r) return false;
    }
  }
  return true;
}

inline bool rows_k_si(std::span<const std::uint64_t> rows, std::size_t k) {
  return gap_feasible(rows, k, 0);
}

/// Children of one parent by canonical augmentation: add vertex s-1 with
/// every neighborhood S, keep the child iff the new vertex lies in the
/// orbit of the canonical deletion vertex (last canonical position, which
/// sits in the top invariant class). Siblings are deduplicated when the
/// parent has nontrivial automorphisms.
inline std::vector<Candidate> augment(std::span<const std::uint64_t> parent,
                                      std::uint64_t parent_auts, const EnumSpec& spec) {
  const std::size_t s = parent.size() + 1;
  const auto fresh = s - 1;
  std::vector<Candidate> out;
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> child(s);
  const std::uint64_t subsets = std::uint64_t{1} << parent.size();
  for (std::uint64_t S = 0; S < subsets; ++S) {
    for (std::size_t i = 0; i < parent.size(); ++i)
      child[i] = parent[i] | (((S >> i) & 1u) << fresh);
    child[fresh] = S;
    if (spec.bipartite_only && !rows_bipartite(child)) continue;
    if (spec.k && spec.degree_gap_prune && !gap_feasible(child, *spec.k, spec.n - s)) continue;
    const auto colors = invariant_colors(child);
    if (colors[fresh] != *std::max_element(colors.begin(), colors.end())) continue;
    auto lab = canonical_labeling(child);
    if (lab.orbit[fresh] != lab.orbit[lab.order[s - 1]]) continue;
    if (parent_auts != 1 && !seen.insert(lab.rows).second) continue;
    out.push_back({std::move(lab.rows), lab.automorphism_count.value_or(0)});
  }
  return out;
}

/// One representative per isomorphism class of graphs of order spec.n in
/// the hereditary class selected by spec (all graphs, or bipartite ones),
/// before the final connectivity / step filters.
inline std::vector<Candidate> generate_level(const EnumSpec& spec) {
  std::vector<Candidate> level{{{0}, 1}};
  for (std::size_t s = 2; s <= spec.n; ++s) {
    std::vector<std::vector<Candidate>> per_parent(level.size());
    const unsigned workers = std::max(1u, spec.workers);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < level.size(); i += workers)
        per_parent[i] = augment(level[i].rows, level[i].automorphisms, spec);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    std::vector<Candidate> next;
    for (auto& kids : per_parent)
      for (auto& c : kids) next.push_back(std::move(c));
    level = std::move(next);
  }
  return level;
}

}  // namespace detail

/// All graphs selected by spec, sorted by canonical graph6 string.
inline std::vector<EnumeratedGraph> collect_graphs(const EnumSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("enumeration: n must be >= 1");
  if (spec.k && *spec.k == 0) throw std::invalid_argument("enumeration: k must be >= 1");
  const auto ceiling = enumeration_ceiling(spec);
  if (spec.n > ceiling) {
    throw LimitExceeded("enumeration: n = " + std::to_string(spec.n) +
                        " exceeds the ceiling " + std::to_string(ceiling) +
                        "; raise it with --max-n or STEPWISE_MAX_N");
  }
  auto level = detail::generate_level(spec);
  std::vector<EnumeratedGraph> out;
  for (auto& c : level) {
    if (spec.connected_only && !detail::rows_connected(c.rows)) continue;
    if (spec.k) {
      const bool has_edge = std::any_of(c.rows.begin(), c.rows.end(), [](auto r) { return r != 0; });
      if (!has_edge || !detail::rows_k_si(c.rows, *spec.k)) continue;
    }
    auto g6 = detail::rows_graph6(c.rows);
    out.push_back({graph6_decode(g6), std::move(g6), c.automorphisms});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.canonical < b.canonical; });
  if (spec.max_results && out.size() > *spec.max_results) out.resize(*spec.max_results);
  return out;
}

/// Visits one representative per isomorphism class, in ascending canonical
/// order, from the calling thread. Returns the number visited.
inline std::size_t enumerate_connected(const EnumSpec& spec,
                                       const std::function<void(const Graph&)>& visit) {
  auto graphs = collect_graphs(spec);
  for (const auto& e : graphs) visit(e.graph);
  return graphs.size();
}

inline EnumSpec k_si_spec(std::size_t n, std::size_t k, unsigned workers = 1) {
  EnumSpec spec;
  spec.n = n;
  spec.k = k;
  spec.bipartite_only = true;
  spec.workers = workers;
  return spec;
}

/// Connected k-SI graphs on n vertices up to isomorphism.
inline std::size_t enumerate_k_si(std::size_t n, std::size_t k,
                                  const std::function<void(const Graph&)>& visit,
                                  unsigned workers = 1) {
  return enumerate_connected(k_si_spec(n, k, workers), visit);
}

struct ExtremalResult {
  std::size_t census = 0;
  /// Empty when no connected k-SI graph of order n exists.
  std::optional<std::size_t> value;
  /// Canonical graph6 strings of every graph attaining the value.
  std::vector<std::string> witnesses;
};

namespace detail {

template <typename Measure>
ExtremalResult extremal(std::size_t n, std::size_t k, unsigned workers, Measure measure) {
  ExtremalResult out;
  for (const auto& e : collect_graphs(k_si_spec(n, k, workers))) {
    ++out.census;
    const std::size_t v = measure(e.graph);
    if (!out.value || v > *out.value) {
      out.value = v;
      out.witnesses.clear();
    }
    if (v == *out.value) out.witnesses.push_back(e.canonical);
  }
  return out;
}

}  // namespace detail

inline ExtremalResult extremal_max_degree(std::size_t n, std::size_t k, unsigned workers = 1) {
  return detail::extremal(n, k, workers, [](const Graph& g) { return g.max_degree(); });
}

inline ExtremalResult extremal_max_size(std::size_t n, std::size_t k, unsigned workers = 1) {
  return detail::extremal(n, k, workers, [](const Graph& g) { return g.size(); });
}

}  // namespace stepwise
