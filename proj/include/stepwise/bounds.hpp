#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "stepwise/canonical.hpp"
#include "stepwise/constructions.hpp"
#include "stepwise/graph.hpp"
#include "stepwise/graph6.hpp"
#include "stepwise/ksi.hpp"

namespace stepwise {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// One theorem evaluated on one graph.
///
/// `holds` compares actual against bound (upper bounds; the Wiener bound is
/// a lower bound). `condition` is the theorem's equality characterization
/// evaluated independently of the bound; `iff_ok` says equality and
/// condition agree, i.e. both directions of the "if and only if".
struct BoundRecord {
  std::string id;
  bool applicable = false;
  std::string not_applicable_reason;
  Rational bound{0};
  std::int64_t actual = 0;
  bool holds = true;
  bool equality = false;
  bool condition = false;
  /// Present only when equality holds.
  std::optional<bool> characterization_ok;
  bool iff_ok = true;

  bool ok() const { return !applicable || (holds && iff_ok); }
};

namespace detail {

inline void finish(BoundRecord& r) {
  if (r.equality) r.characterization_ok = r.condition;
  r.iff_ok = r.equality == r.condition;
}

/// g ≅ K_{a,b}, via canonical forms when g is small enough to canonicalize.
inline bool is_complete_bipartite_iso(const Graph& g, std::size_t a, std::size_t b) {
  if (a == 0 || b == 0 || g.order() != a + b || g.size() != a * b) return false;
  if (g.order() <= kDefaultCanonicalLimit)
    return canonical_form(g).graph6 == canonical_form(complete_bipartite(a, b)).graph6;
  return is_complete_bipartite_with_parts(g, a, b);
}

struct Params {
  std::int64_t n, m, D, k;
  KsiPartition part;
};

inline Params params(const Graph& g, std::size_t k) {
  auto part = ksi_partition(g, k);
  return {static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(g.size()),
          static_cast<std::int64_t>(part.max_degree), static_cast<std::int64_t>(k),
          std::move(part)};
}

}  // namespace detail

/// max_degree <= floor((n+k)/2), equality iff g ≅ K_{(n+k)/2,(n-k)/2}.
inline BoundRecord max_degree_bound(const Graph& g, std::size_t k) {
  const auto p = detail::params(g, k);
  BoundRecord r;
  r.id = "max_degree";
  r.applicable = true;
  r.bound = Rational((p.n + p.k) / 2);
  r.actual = p.D;
  r.holds = p.D <= (p.n + p.k) / 2;
  r.equality = p.D == (p.n + p.k) / 2;
  r.condition = (p.n + p.k) % 2 == 0 && p.n >= p.k &&
                detail::is_complete_bipartite_iso(g, (p.n + p.k) / 2, (p.n - p.k) / 2);
  detail::finish(r);
  return r;
}

/// m <= n D (D-k) / (2D-k), equality iff C_d = 2.
inline BoundRecord size_bound(const Graph& g, std::size_t k) {
  const auto p = detail::params(g, k);
  BoundRecord r;
  r.id = "size";
  r.applicable = true;
  const auto num = p.n * p.D * (p.D - p.k);
  const auto den = 2 * p.D - p.k;
  r.bound = Rational(num, den);
  r.actual = p.m;
  r.holds = p.m * den <= num;
  r.equality = p.m * den == num;
  r.condition = p.part.degree_complexity == 2;
  detail::finish(r);
  return r;
}

/// For radius >= 2: W >= n [n - D(D-k)/(2D-k) - 1], equality iff g is
/// 2-self-centered with C_d = 2.
inline BoundRecord wiener_bound(const Graph& g, std::size_t k) {
  const auto p = detail::params(g, k);
  const auto metrics = metric_summary(g);
  BoundRecord r;
  r.id = "wiener";
  r.actual = static_cast<std::int64_t>(metrics.wiener);
  if (metrics.radius < 2) {
    r.not_applicable_reason = "radius 1";
    return r;
  }
  r.applicable = true;
  const auto den = 2 * p.D - p.k;
  const auto num = p.n * (p.n - 1) * den - p.n * p.D * (p.D - p.k);
  r.bound = Rational(num, den);
  r.holds = r.actual * den >= num;
  r.equality = r.actual * den == num;
  r.condition = metrics.is_2_self_centered && p.part.degree_complexity == 2;
  detail::finish(r);
  return r;
}

/// For gcd(D, k) = 1 and g not ≅ K_{D,D-k}: m <= (D-k)(n-D+k-1), equality
/// iff C_d = 3 and |X| = D-k+1 (X the side holding a max-degree vertex).
inline BoundRecord coprime_size_bound(const Graph& g, std::size_t k) {
  const auto p = detail::params(g, k);
  BoundRecord r;
  r.id = "coprime_size";
  r.actual = p.m;
  if (std::gcd(p.D, p.k) != 1) {
    r.not_applicable_reason = "gcd(max_degree, k) != 1";
    return r;
  }
  if (detail::is_complete_bipartite_iso(g, static_cast<std::size_t>(p.D),
                                        static_cast<std::size_t>(p.D - p.k))) {
    r.not_applicable_reason = "graph is K_{max_degree, max_degree-k}";
    return r;
  }
  r.applicable = true;
  const auto bound = (p.D - p.k) * (p.n - p.D + p.k - 1);
  r.bound = Rational(bound);
  r.holds = p.m <= bound;
  r.equality = p.m == bound;
  const auto bip = bipartition(g);
  const auto x = static_cast<std::int64_t>(bip.parts[bip.part_with_max_degree].size());
  r.condition = p.part.degree_complexity == 3 && x == p.D - p.k + 1;
  detail::finish(r);
  return r;
}

/// Every checker on one connected k-SI graph.
struct FullReport {
  std::string graph6;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  KsiPartition partition;
  MetricSummary metrics;
  InequalityReport inequalities;
  ParityCheck parity;
  ClaimCheck divisibility;
  ClaimCheck even_diameter;
  ClaimCheck diameter2_uniqueness;
  std::vector<BoundRecord> bounds;
  bool overall = true;

  /// Names of the checks that failed.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& r : inequalities.records)
      if (!r.holds) out.push_back(r.id + (r.index ? "[" + std::to_string(*r.index) + "]" : ""));
    if (!inequalities.eq5_eq6_equality_iff_cd2) out.emplace_back("eq5_eq6_equality_iff_cd2");
    if (!parity.holds) out.emplace_back("parity");
    if (!divisibility.holds) out.emplace_back("divisibility");
    if (!even_diameter.holds) out.emplace_back("even_diameter");
    if (!diameter2_uniqueness.holds) out.emplace_back("diameter2_uniqueness");
    for (const auto& b : bounds)
      if (!b.ok()) out.push_back(b.id + (b.holds ? "_characterization" : ""));
    return out;
  }
};

inline FullReport full_report(const Graph& g, std::size_t k) {
  FullReport rep;
  rep.partition = ksi_partition(g, k);  // rejects non-k-SI and disconnected input
  rep.graph6 = graph6_encode(g);
  rep.k = k;
  rep.n = g.order();
  rep.m = g.size();
  rep.metrics = metric_summary(g);
  rep.inequalities = check_inequalities(rep.partition, g);
  rep.parity = check_parity(g, k);
  rep.divisibility = check_divisibility(g, k);
  rep.even_diameter = check_even_diameter_class(g, k);
  rep.diameter2_uniqueness = check_diameter2_uniqueness(g, k);
  rep.bounds = {max_degree_bound(g, k), size_bound(g, k), wiener_bound(g, k),
                coprime_size_bound(g, k)};
  rep.overall = rep.failures().empty();
  return rep;
}

}  // namespace stepwise
