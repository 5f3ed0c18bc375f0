#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "stepwise/errors.hpp"
#include "stepwise/graph.hpp"

namespace stepwise {

/// |d(u) - d(v)| for every edge, in Graph::edges() order.
inline std::vector<std::size_t> edge_imbalances(const Graph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.size());
  for (auto [u, v] : g.edges()) {
    auto du = g.degree(u), dv = g.degree(v);
    out.push_back(du > dv ? du - dv : dv - du);
  }
  return out;
}

/// True iff every edge has imbalance exactly k. Edgeless graphs pass vacuously.
inline bool is_k_si(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("is_k_si: step k must be positive");
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto du = g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      const auto dv = g.degree(v);
      if ((du > dv ? du - dv : dv - du) != k) return false;
    }
  }
  return true;
}

/// The common imbalance k >= 1 of all edges, or nullopt when imbalances are
/// mixed or zero. Edgeless graphs have no step and are rejected.
inline std::optional<std::size_t> si_step(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("si_step: graph has no edges");
  auto imb = edge_imbalances(g);
  const auto k = imb.front();
  if (k == 0) return std::nullopt;
  for (auto x : imb)
    if (x != k) return std::nullopt;
  return k;
}

/// Degree classes A_i = { v : d(v) = max_degree - i*k }.
struct KsiPartition {
  std::size_t k = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t degree_complexity = 0;
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> counts;

  /// a_i, with out-of-range indices read as 0.
  std::size_t a(std::ptrdiff_t i) const {
    return i < 0 || static_cast<std::size_t>(i) >= counts.size() ? 0 : counts[i];
  }
  /// Degree shared by the vertices of A_i.
  std::size_t class_degree(std::size_t i) const { return max_degree - i * k; }
};

namespace detail {

inline void require_ksi(const Graph& g, std::size_t k, const char* who) {
  if (k == 0) throw std::invalid_argument(std::string(who) + ": step k must be positive");
  if (g.size() == 0) throw NotStepwise(std::string(who) + ": edgeless graph has no degree classes");
  if (!is_k_si(g, k))
    throw NotStepwise(std::string(who) + ": graph is not " + std::to_string(k) + "-SI");
  if (!is_connected(g)) throw NotConnected(std::string(who) + ": graph is disconnected");
}

}  // namespace detail

inline KsiPartition ksi_partition(const Graph& g, std::size_t k) {
  detail::require_ksi(g, k, "ksi_partition");
  KsiPartition p;
  p.k = k;
  p.max_degree = g.max_degree();
  p.min_degree = g.min_degree();
  // Connectivity plus the step make (max - min) a multiple of k.
  p.degree_complexity = (p.max_degree - p.min_degree) / k + 1;
  p.classes.resize(p.degree_complexity);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto gap = p.max_degree - g.degree(v);
    if (gap % k != 0) throw NotStepwise("ksi_partition: degree off the k-lattice");
    p.classes[gap / k].push_back(v);
  }
  p.counts.reserve(p.classes.size());
  for (const auto& c : p.classes) {
    if (c.empty()) throw NotStepwise("ksi_partition: empty degree class");
    p.counts.push_back(c.size());
  }
  return p;
}

enum class Relation { less_equal, greater_equal, equal };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::greater_equal: return ">=";
    case Relation::equal: return "==";
  }
  return "?";
}

struct InequalityRecord {
  std::string id;                  // "eq1" .. "eq9"
  std::optional<std::size_t> index;  // class index i for eq3 / eq4
  Relation relation = Relation::less_equal;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool applicable = true;
  bool holds = true;
  bool equality = false;
};

struct InequalityReport {
  std::vector<InequalityRecord> records;
  /// Equality in eq5 and in eq6 each occur exactly when C_d = 2.
  bool eq5_eq6_equality_iff_cd2 = true;
  bool overall = true;
};

namespace detail {

inline InequalityRecord make_record(std::string id, Relation rel, std::int64_t lhs,
                                    std::int64_t rhs,
                                    std::optional<std::size_t> index = std::nullopt) {
  InequalityRecord r;
  r.id = std::move(id);
  r.index = index;
  r.relation = rel;
  r.lhs = lhs;
  r.rhs = rhs;
  r.equality = lhs == rhs;
  switch (rel) {
    case Relation::less_equal: r.holds = lhs <= rhs; break;
    case Relation::greater_equal: r.holds = lhs >= rhs; break;
    case Relation::equal: r.holds = lhs == rhs; break;
  }
  return r;
}

inline void check_partition_matches(const KsiPartition& p, const Graph& g) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    for (Vertex v : p.classes[i]) {
      if (v >= g.order() || g.degree(v) != p.class_degree(i))
        throw std::invalid_argument("check_inequalities: partition does not match graph");
    }
    total += p.classes[i].size();
  }
  if (total != g.order() || p.counts.size() != p.classes.size() || p.classes.size() < 2)
    throw std::invalid_argument("check_inequalities: partition does not match graph");
}

}  // namespace detail

/// Evaluates the degree-class inequalities eq1..eq7 and the two bipartite
/// degree-sum identities eq8 (sum over X) and eq9 (sum over Y), where X is
/// the side holding a maximum-degree vertex.
///
/// eq3 and eq4 are evaluated for interior classes i = 1..C_d-2 only; the
/// boundary classes are what eq5 and eq6 cover.
inline InequalityReport check_inequalities(const KsiPartition& p, const Graph& g) {
  detail::check_partition_matches(p, g);
  using detail::make_record;
  const auto D = static_cast<std::int64_t>(p.max_degree);
  const auto delta = static_cast<std::int64_t>(p.min_degree);
  const auto k = static_cast<std::int64_t>(p.k);
  const auto cd = static_cast<std::ptrdiff_t>(p.degree_complexity);
  auto a = [&](std::ptrdiff_t i) { return static_cast<std::int64_t>(p.a(i)); };

  InequalityReport rep;
  rep.records.push_back(make_record("eq1", Relation::greater_equal, a(1), D));
  rep.records.push_back(make_record("eq2", Relation::greater_equal, a(cd - 2), delta));
  for (std::ptrdiff_t i = 1; i <= cd - 2; ++i)
    rep.records.push_back(
        make_record("eq3", Relation::less_equal, D - i * k, a(i - 1) + a(i + 1), i));
  for (std::ptrdiff_t i = 1; i <= cd - 2; ++i)
    rep.records.push_back(make_record("eq4", Relation::less_equal, a(i) * (D - i * k),
                                      a(i - 1) * (D - (i - 1) * k) + a(i + 1) * (D - (i + 1) * k),
                                      i));
  auto eq5 = make_record("eq5", Relation::less_equal, a(0) * D, a(1) * (D - k));
  auto eq6 = make_record("eq6", Relation::less_equal, a(cd - 1) * delta, a(cd - 2) * (delta + k));
  rep.eq5_eq6_equality_iff_cd2 = eq5.equality == (cd == 2) && eq6.equality == (cd == 2);
  rep.records.push_back(eq5);
  rep.records.push_back(eq6);
  auto eq7 = make_record("eq7", Relation::greater_equal, a(0) + a(2), D - k + 1);
  if (cd < 3) {
    eq7.applicable = false;
    eq7.holds = true;
  }
  rep.records.push_back(eq7);

  const auto bip = bipartition(g);
  std::int64_t sum_x = 0, sum_y = 0;
  if (bip.is_bipartite) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool in_x = bip.side[v] == bip.part_with_max_degree;
      (in_x ? sum_x : sum_y) += static_cast<std::int64_t>(g.degree(v));
    }
  }
  const auto m = static_cast<std::int64_t>(g.size());
  rep.records.push_back(make_record("eq8", Relation::equal, sum_x, m));
  rep.records.push_back(make_record("eq9", Relation::equal, sum_y, m));

  rep.overall = rep.eq5_eq6_equality_iff_cd2;
  for (const auto& r : rep.records) rep.overall = rep.overall && r.holds;
  return rep;
}

struct ClaimCheck {
  bool applicable = false;
  bool holds = true;
};

struct ParityCheck : ClaimCheck {
  std::uint64_t m = 0;
  std::uint64_t sum_x = 0;           // sum of degrees over X
  std::uint64_t sum_y = 0;           // sum of degrees over Y
  std::uint64_t sum_even_classes = 0;  // sum_i a_{2i} (max - 2ik)
  std::uint64_t sum_odd_classes = 0;   // sum_i a_{2i+1} (max - (2i+1)k)
  bool sums_agree = false;
};

/// If k and the maximum degree have equal parity then m is even. The edge
/// count is recomputed from both bipartition sides and from the class
/// counts, and all five values must agree.
inline ParityCheck check_parity(const Graph& g, std::size_t k) {
  const auto p = ksi_partition(g, k);
  const auto bip = bipartition(g);
  ParityCheck out;
  out.m = g.size();
  for (Vertex v = 0; v < g.order(); ++v)
    (bip.is_bipartite && bip.side[v] == bip.part_with_max_degree ? out.sum_x : out.sum_y) +=
        g.degree(v);
  for (std::size_t i = 0; i < p.counts.size(); ++i)
    (i % 2 == 0 ? out.sum_even_classes : out.sum_odd_classes) += p.counts[i] * p.class_degree(i);
  out.sums_agree = bip.is_bipartite && out.sum_x == out.m && out.sum_y == out.m &&
                   out.sum_even_classes == out.m && out.sum_odd_classes == out.m;
  out.applicable = (k % 2) == (p.max_degree % 2);
  out.holds = out.sums_agree && (!out.applicable || out.m % 2 == 0);
  return out;
}

/// C_d = 2 and gcd(max_degree, k) = 1 imply (2*max_degree - k) | n.
inline ClaimCheck check_divisibility(const Graph& g, std::size_t k) {
  const auto p = ksi_partition(g, k);
  ClaimCheck out;
  out.applicable = p.degree_complexity == 2 && std::gcd(p.max_degree, k) == 1;
  if (out.applicable) out.holds = g.order() % (2 * p.max_degree - k) == 0;
  return out;
}

/// k-SI trees and unicyclic graphs have even diameter.
inline ClaimCheck check_even_diameter_class(const Graph& g, std::size_t k) {
  detail::require_ksi(g, k, "check_even_diameter_class");
  ClaimCheck out;
  out.applicable = classify_cyclicity(g) != Cyclicity::other;
  if (out.applicable) out.holds = metric_summary(g).diameter % 2 == 0;
  return out;
}

/// True iff g is the complete bipartite graph with the given part sizes
/// (in either orientation), compared structurally.
inline bool is_complete_bipartite_with_parts(const Graph& g, std::size_t a, std::size_t b) {
  if (g.order() != a + b || g.size() != a * b) return false;
  const auto bip = bipartition(g);
  if (!bip.is_bipartite || !is_connected(g)) return false;
  auto x = bip.parts[0].size(), y = bip.parts[1].size();
  return (x == a && y == b) || (x == b && y == a);
}

/// A k-SI graph of diameter 2 is K_{(n+k)/2, (n-k)/2}.
inline ClaimCheck check_diameter2_uniqueness(const Graph& g, std::size_t k) {
  detail::require_ksi(g, k, "check_diameter2_uniqueness");
  ClaimCheck out;
  out.applicable = metric_summary(g).diameter == 2;
  if (out.applicable) {
    const auto n = g.order();
    out.holds = (n + k) % 2 == 0 && n >= k &&
                is_complete_bipartite_with_parts(g, (n + k) / 2, (n - k) / 2);
  }
  return out;
}

}  // namespace stepwise
