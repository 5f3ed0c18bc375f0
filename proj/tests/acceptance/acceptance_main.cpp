// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--only N] [--seed S] [--workers W]
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "census.hpp"
#include "oracles.hpp"
#include "stepwise/stepwise.hpp"

using namespace stepwise;

namespace {

// Tolerances. Every comparison below is exact (integers or exact rationals).
constexpr std::size_t kCensusMaxN = 8;
constexpr std::size_t kTreeMaxN = 10;
constexpr std::size_t kUnicyclicMaxN = 9;
constexpr std::size_t kOracleMaxN = 7;
constexpr std::size_t kProductFactorMaxN = 5;
constexpr int kRandomProductPairs = 100;
constexpr std::uint64_t kDefaultSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Context {
  unsigned workers = 4;
  std::uint64_t seed = kDefaultSeed;

  const std::vector<census::Entry>& ksi(std::size_t max_n) {
    auto& slot = ksi_cache[max_n];
    if (!slot) slot = census::k_si_census(max_n, workers);
    return *slot;
  }

 private:
  std::map<std::size_t, std::optional<std::vector<census::Entry>>> ksi_cache;
};

std::string join(const std::vector<std::string>& items, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? " " : "") + items[i];
  if (items.size() > limit) out += " ...";
  return out;
}

Outcome bipartiteness(Context& ctx) {
  // The bipartite-only generation prune is switched off so the property is
  // observed rather than assumed.
  std::size_t graphs = 0;
  std::vector<std::string> bad;
  for (std::size_t n = 3; n <= kCensusMaxN; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      auto spec = k_si_spec(n, k, ctx.workers);
      spec.bipartite_only = false;
      for (const auto& e : collect_graphs(spec)) {
        ++graphs;
        if (!bipartition(e.graph).is_bipartite || !oracle::bipartite(oracle::from_graph(e.graph)))
          bad.push_back(e.canonical);
      }
    }
  }
  return {bad.empty() && graphs > 0,
          std::to_string(graphs) + " graphs, " + std::to_string(bad.size()) + " non-bipartite " + join(bad)};
}

Outcome max_degree_sharpness(Context& ctx) {
  Outcome out;
  std::ostringstream msg;
  for (std::size_t n : {5u, 7u, 9u}) {
    const auto r = extremal_max_degree(n, 1, ctx.workers);
    const auto expected = canonical_form(complete_bipartite((n + 1) / 2, (n - 1) / 2)).graph6;
    const bool ok = r.value == (n + 1) / 2 && r.witnesses == std::vector<std::string>{expected};
    out.pass = out.pass && ok;
    msg << "n=" << n << ":" << (ok ? "ok" : "bad") << " ";
  }
  std::vector<std::string> bad;
  std::size_t equalities = 0, graphs = 0;
  for (std::size_t n = 3; n <= 9; ++n) {
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      for (const auto& e : collect_graphs(k_si_spec(n, k, ctx.workers))) {
        ++graphs;
        const auto b = max_degree_bound(e.graph, k);
        equalities += b.equality;
        if (!b.holds || (b.equality && !b.condition))
          bad.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ")" + e.canonical);
      }
    }
  }
  out.pass = out.pass && bad.empty();
  msg << "| " << graphs << " graphs n<=9, " << equalities << " equalities, " << bad.size()
      << " uncharacterized " << join(bad);
  out.detail = msg.str();
  return out;
}

Outcome size_equality_iff_cd2(Context& ctx) {
  std::size_t eq_not_cd2 = 0, cd2_not_eq = 0, both = 0;
  const auto& all = ctx.ksi(kCensusMaxN);
  for (const auto& e : all) {
    const auto b = size_bound(e.graph, e.k);
    const bool cd2 = ksi_partition(e.graph, e.k).degree_complexity == 2;
    const bool exact = Rational(b.actual) == b.bound;
    if (exact != b.equality) return {false, "equality flag disagrees with rational comparison on " + e.canonical};
    eq_not_cd2 += b.equality && !cd2;
    cd2_not_eq += cd2 && !b.equality;
    both += b.equality && cd2;
  }
  return {eq_not_cd2 == 0 && cd2_not_eq == 0,
          std::to_string(all.size()) + " graphs, " + std::to_string(both) + " equal with C_d=2, " +
              std::to_string(eq_not_cd2) + " equality without C_d=2, " + std::to_string(cd2_not_eq) +
              " C_d=2 without equality"};
}

Outcome wiener_anchor(Context& ctx) {
  const auto g = complete_bipartite(3, 2);
  const auto b = wiener_bound(g, 1);
  const Rational expected = Rational(5) * (Rational(5) - Rational(6, 5) - Rational(1));
  const auto m = metric_summary(g);
  const bool anchor = b.applicable && m.wiener == 14 && b.bound == expected && expected == Rational(14) &&
                      b.equality && m.is_2_self_centered && ksi_partition(g, 1).degree_complexity == 2;
  std::size_t equalities = 0, unconditioned = 0, applicable = 0;
  for (const auto& e : ctx.ksi(kCensusMaxN)) {
    const auto r = wiener_bound(e.graph, e.k);
    if (!r.applicable) continue;
    ++applicable;
    if (!r.equality) continue;
    ++equalities;
    const bool cond = metric_summary(e.graph).is_2_self_centered &&
                      ksi_partition(e.graph, e.k).degree_complexity == 2;
    unconditioned += !cond;
  }
  return {anchor && unconditioned == 0,
          std::string("W(K_{3,2})=") + std::to_string(m.wiener) + " bound=" + to_string(b.bound) + "; " +
              std::to_string(equalities) + " equalities over " + std::to_string(applicable) +
              " applicable graphs, " + std::to_string(unconditioned) + " outside the condition"};
}

Outcome family_contracts(Context&) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (std::size_t p = 2; p <= 6; ++p) {
    for (std::size_t q = 2; q <= 6; ++q) {
      const auto g = gamma(p, q);
      const auto h = h_family(p, q);
      cases += 2;
      if (si_step(g) != 2 * p - 2 || metric_summary(g).diameter != q)
        bad.push_back("gamma:" + std::to_string(p) + "," + std::to_string(q));
      if (si_step(h) != p || metric_summary(h).diameter != 2 * q)
        bad.push_back("h:" + std::to_string(p) + "," + std::to_string(q));
    }
  }
  return {bad.empty() && cases == 50,
          std::to_string(cases / 2) + " gamma + " + std::to_string(cases / 2) + " h cases, " +
              std::to_string(bad.size()) + " failed " + join(bad)};
}

Outcome diameter_builder(Context&) {
  std::vector<std::string> bad;
  std::size_t cases = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t d = 2; d <= 8; ++d) {
      ++cases;
      try {
        const auto g = build_k_si_with_diameter(k, d);
        if (!is_k_si(g, k) || metric_summary(g).diameter != d) bad.push_back(std::to_string(k) + "," + std::to_string(d));
      } catch (const std::exception& ex) {
        bad.push_back(std::to_string(k) + "," + std::to_string(d) + ":" + ex.what());
      }
    }
  }
  return {bad.empty() && cases == 28,
          std::to_string(cases) + " cases, " + std::to_string(bad.size()) + " failed " + join(bad)};
}

Outcome product_iff(Context& ctx) {
  std::vector<Graph> one_si;
  for (std::size_t n = 3; n <= kProductFactorMaxN; ++n)
    for (const auto& e : collect_graphs(k_si_spec(n, 1, ctx.workers))) one_si.push_back(e.graph);
  std::size_t forward_bad = 0, pairs = 0;
  for (const auto& g : one_si)
    for (const auto& h : one_si) {
      ++pairs;
      forward_bad += !is_k_si(cartesian_product(g, h), 1);
    }

  std::mt19937_64 rng(ctx.seed);
  std::size_t converse_bad = 0;
  int sampled = 0;
  while (sampled < kRandomProductPairs) {
    const int n = 2 + static_cast<int>(rng() % 6);
    auto bad_factor = oracle::random_graph(rng, n, 0.5);
    if (bad_factor.size() == 0 || !is_connected(bad_factor) || is_k_si(bad_factor, 1)) continue;
    Graph other;
    if (rng() % 2 == 0) {
      other = one_si[rng() % one_si.size()];
    } else {
      other = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
      if (!is_connected(other)) continue;
    }
    const bool left = rng() % 2 == 0;
    const auto prod = left ? cartesian_product(bad_factor, other) : cartesian_product(other, bad_factor);
    converse_bad += is_k_si(prod, 1);
    ++sampled;
  }
  return {forward_bad == 0 && converse_bad == 0 && pairs > 0,
          std::to_string(pairs) + " ordered 1-SI pairs (" + std::to_string(forward_bad) + " not 1-SI); " +
              std::to_string(sampled) + " random pairs, seed " + std::to_string(ctx.seed) + " (" +
              std::to_string(converse_bad) + " unexpectedly 1-SI)"};
}

Outcome parity_divisibility(Context& ctx) {
  std::size_t parity_applicable = 0, div_applicable = 0;
  std::vector<std::string> bad;
  const auto& all = ctx.ksi(kCensusMaxN);
  for (const auto& e : all) {
    const auto par = check_parity(e.graph, e.k);
    const auto div = check_divisibility(e.graph, e.k);
    const auto ineq = check_inequalities(ksi_partition(e.graph, e.k), e.graph);
    parity_applicable += par.applicable;
    div_applicable += div.applicable;
    bool sums = par.sums_agree;
    for (const auto& r : ineq.records)
      if ((r.id == "eq8" || r.id == "eq9") && r.lhs != static_cast<std::int64_t>(e.graph.size())) sums = false;
    if (!par.holds || !div.holds || !sums) bad.push_back(e.canonical);
  }
  return {bad.empty(), std::to_string(all.size()) + " graphs, parity applicable " +
                           std::to_string(parity_applicable) + ", divisibility applicable " +
                           std::to_string(div_applicable) + ", " + std::to_string(bad.size()) +
                           " counterexamples " + join(bad)};
}

Outcome even_diameter(Context& ctx) {
  std::size_t trees = 0, unicyclic = 0;
  std::vector<std::string> bad;
  for (const auto& e : ctx.ksi(kTreeMaxN)) {
    const auto c = classify_cyclicity(e.graph);
    const bool in_scope = (c == Cyclicity::tree) || (c == Cyclicity::unicyclic && e.n <= kUnicyclicMaxN);
    if (!in_scope) continue;
    (c == Cyclicity::tree ? trees : unicyclic) += 1;
    const auto r = check_even_diameter_class(e.graph, e.k);
    if (!r.applicable || !r.holds) bad.push_back(e.canonical);
  }
  return {bad.empty() && trees > 0 && unicyclic > 0,
          std::to_string(trees) + " trees (n<=10), " + std::to_string(unicyclic) + " unicyclic (n<=9), " +
              std::to_string(bad.size()) + " odd diameter " + join(bad)};
}

/// Labeled counts of connected graphs and of connected k-SI graphs on n
/// vertices, from one pass over all 2^C(n,2) labeled graphs.
struct LabeledCounts {
  std::uint64_t connected = 0;
  std::map<int, std::uint64_t> by_step;
};

LabeledCounts labeled_counts(int n) {
  LabeledCounts out;
  const std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto s = oracle::from_mask(n, mask);
    if (!oracle::connected(s)) continue;
    ++out.connected;
    for (int k = 1; k + 2 <= n; ++k)
      if (oracle::k_si(s, k)) ++out.by_step[k];
  }
  return out;
}

Outcome infrastructure(Context& ctx) {
  std::ostringstream msg;
  bool pass = true;

  std::size_t round_trips = 0, rt_bad = 0;
  auto round_trip = [&](const std::string& canon, const Graph& g) {
    ++round_trips;
    const auto text = graph6_encode(g);
    const auto back = graph6_decode(text);
    const auto ref = oracle::decode_graph6(text);
    if (text != canon || !(back == g) || !ref || !(oracle::to_graph(*ref) == g)) ++rt_bad;
  };
  for (const auto& e : ctx.ksi(kTreeMaxN)) round_trip(e.canonical, e.graph);
  for (std::size_t n = 1; n <= kCensusMaxN; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.workers = ctx.workers;
    for (const auto& e : collect_graphs(spec)) round_trip(e.canonical, e.graph);
  }
  pass = pass && rt_bad == 0;
  msg << "graph6 " << round_trips << " round trips, " << rt_bad << " bad; ";

  std::size_t count_bad = 0, checks = 0;
  for (int n = 1; n <= static_cast<int>(kOracleMaxN); ++n) {
    const auto labeled = labeled_counts(n);
    auto orbit_sum = [&](const std::vector<EnumeratedGraph>& graphs) {
      std::uint64_t sum = 0;
      for (const auto& e : graphs) sum += oracle::factorial(n) / oracle::brute_automorphisms(oracle::from_graph(e.graph));
      return sum;
    };
    EnumSpec spec;
    spec.n = n;
    spec.workers = ctx.workers;
    ++checks;
    count_bad += orbit_sum(collect_graphs(spec)) != labeled.connected;
    for (int k = 1; k + 2 <= n; ++k) {
      ++checks;
      const auto it = labeled.by_step.find(k);
      const std::uint64_t want = it == labeled.by_step.end() ? 0 : it->second;
      count_bad += orbit_sum(collect_graphs(k_si_spec(n, k, ctx.workers))) != want;
    }
  }
  pass = pass && count_bad == 0;
  msg << "naive oracle " << checks << " counts, " << count_bad << " mismatched; ";

  const auto one = survey_csv(3, 9, 1, 3, 1);
  const auto eight = survey_csv(3, 9, 1, 3, 8);
  pass = pass && one == eight;
  msg << "survey csv " << one.size() << " bytes, 1 vs 8 workers " << (one == eight ? "identical" : "DIFFER");
  return {pass, msg.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::optional<int> only;
  Context ctx;
  ctx.workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
  app.add_option("--seed", ctx.seed, "seed for sampled checks");
  app.add_option("--workers", ctx.workers)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "bipartiteness census", bipartiteness},
      {2, "max-degree sharpness", max_degree_sharpness},
      {3, "size-bound equality iff C_d = 2", size_equality_iff_cd2},
      {4, "Wiener anchor", wiener_anchor},
      {5, "family contracts", family_contracts},
      {6, "diameter builder", diameter_builder},
      {7, "product iff", product_iff},
      {8, "parity and divisibility", parity_divisibility},
      {9, "even diameter", even_diameter},
      {10, "infrastructure", infrastructure},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only && *only != c.id) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  ["
              << o.detail << "] (" << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
