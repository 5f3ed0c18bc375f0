#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "stepwise/bounds.hpp"
#include "stepwise/enumeration.hpp"

namespace stepwise {

/// Census of the connected k-SI graphs of one order, with every bound
/// evaluated on every graph.
struct SurveyRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t count = 0;
  std::optional<std::size_t> max_delta;
  std::size_t delta_bound = 0;  // floor((n+k)/2)
  std::size_t max_delta_witnesses = 0;
  std::optional<std::size_t> max_m;
  std::size_t max_m_witnesses = 0;
  std::optional<Rational> size_bound_at_max_m;
  std::optional<Rational> coprime_bound_at_max_m;
  std::size_t max_degree_equalities = 0;
  std::size_t size_equalities = 0;
  std::size_t wiener_applicable = 0;
  std::size_t wiener_equalities = 0;
  std::size_t coprime_applicable = 0;
  std::size_t coprime_equalities = 0;
  /// Graphs with at least one failed check.
  std::size_t failures = 0;
  std::vector<std::string> failing_graphs;
};

/// Full reports for a list of graphs, computed on `workers` threads and
/// returned in input order.
inline std::vector<FullReport> reports_for(const std::vector<EnumeratedGraph>& graphs, std::size_t k,
                                           unsigned workers) {
  std::vector<FullReport> out(graphs.size());
  workers = std::max(1u, workers);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < graphs.size(); i += workers) out[i] = full_report(graphs[i].graph, k);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline SurveyRow survey_row(std::size_t n, std::size_t k, unsigned workers = 1,
                            std::optional<std::size_t> max_n = std::nullopt) {
  auto spec = k_si_spec(n, k, workers);
  spec.max_n = max_n;
  const auto graphs = collect_graphs(spec);
  const auto reports = reports_for(graphs, k, workers);
  SurveyRow row;
  row.n = n;
  row.k = k;
  row.count = graphs.size();
  row.delta_bound = (n + k) / 2;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i].graph;
    const auto& rep = reports[i];
    const auto d = g.max_degree();
    if (!row.max_delta || d > *row.max_delta) {
      row.max_delta = d;
      row.max_delta_witnesses = 0;
    }
    if (d == *row.max_delta) ++row.max_delta_witnesses;
    if (!row.max_m || g.size() > *row.max_m) {
      row.max_m = g.size();
      row.max_m_witnesses = 0;
      row.size_bound_at_max_m = rep.bounds[1].bound;
      row.coprime_bound_at_max_m =
          rep.bounds[3].applicable ? std::optional<Rational>(rep.bounds[3].bound) : std::nullopt;
    }
    if (g.size() == *row.max_m) ++row.max_m_witnesses;
    for (const auto& b : rep.bounds) {
      if (b.id == "max_degree" && b.equality) ++row.max_degree_equalities;
      if (b.id == "size" && b.equality) ++row.size_equalities;
      if (b.id == "wiener" && b.applicable) {
        ++row.wiener_applicable;
        row.wiener_equalities += b.equality;
      }
      if (b.id == "coprime_size" && b.applicable) {
        ++row.coprime_applicable;
        row.coprime_equalities += b.equality;
      }
    }
    if (!rep.overall) {
      ++row.failures;
      row.failing_graphs.push_back(rep.graph6);
    }
  }
  return row;
}

inline constexpr const char* kSurveyCsvHeader =
    "n,k,count,max_delta,delta_bound,max_delta_witnesses,max_m,max_m_witnesses,"
    "size_bound_at_max_m,coprime_bound_at_max_m,max_degree_equalities,size_equalities,"
    "wiener_applicable,wiener_equalities,coprime_applicable,coprime_equalities,failures";

inline std::string csv_row(const SurveyRow& r) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  auto rat = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string(); };
  std::ostringstream out;
  out << r.n << ',' << r.k << ',' << r.count << ',' << opt(r.max_delta) << ',' << r.delta_bound
      << ',' << r.max_delta_witnesses << ',' << opt(r.max_m) << ',' << r.max_m_witnesses << ','
      << rat(r.size_bound_at_max_m) << ',' << rat(r.coprime_bound_at_max_m) << ','
      << r.max_degree_equalities << ',' << r.size_equalities << ',' << r.wiener_applicable << ','
      << r.wiener_equalities << ',' << r.coprime_applicable << ',' << r.coprime_equalities << ','
      << r.failures;
  return out.str();
}

/// CSV for every (n, k) in the two inclusive ranges; byte-identical for any
/// worker count.
inline std::string survey_csv(std::size_t n_lo, std::size_t n_hi, std::size_t k_lo, std::size_t k_hi,
                              unsigned workers = 1,
                              std::optional<std::size_t> max_n = std::nullopt) {
  if (n_lo == 0 || n_lo > n_hi || k_lo == 0 || k_lo > k_hi)
    throw std::invalid_argument("survey: ranges must be nonempty with n, k >= 1");
  std::ostringstream out;
  out << kSurveyCsvHeader << '\n';
  for (std::size_t n = n_lo; n <= n_hi; ++n)
    for (std::size_t k = k_lo; k <= k_hi; ++k) out << csv_row(survey_row(n, k, workers, max_n)) << '\n';
  return out.str();
}

}  // namespace stepwise
