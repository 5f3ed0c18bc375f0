#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "stepwise/bounds.hpp"
#include "stepwise/ksi.hpp"

namespace stepwise {

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::json to_json(const InequalityRecord& r) {
  nlohmann::json j{{"id", r.id},         {"relation", to_string(r.relation)},
                   {"lhs", r.lhs},       {"rhs", r.rhs},
                   {"applicable", r.applicable}, {"holds", r.holds},
                   {"equality", r.equality}};
  if (r.index) j["index"] = *r.index;
  return j;
}

inline nlohmann::json to_json(const ClaimCheck& c) {
  return {{"applicable", c.applicable}, {"holds", c.holds}};
}

inline nlohmann::json to_json(const ParityCheck& c) {
  return {{"applicable", c.applicable},
          {"holds", c.holds},
          {"m", c.m},
          {"sum_x", c.sum_x},
          {"sum_y", c.sum_y},
          {"sum_even_classes", c.sum_even_classes},
          {"sum_odd_classes", c.sum_odd_classes},
          {"sums_agree", c.sums_agree}};
}

inline nlohmann::json to_json(const BoundRecord& b) {
  nlohmann::json j{{"id", b.id}, {"applicable", b.applicable}, {"actual", b.actual}};
  if (!b.applicable) {
    j["reason"] = b.not_applicable_reason;
    return j;
  }
  j["bound"] = to_string(b.bound);
  j["bound_num"] = b.bound.numerator();
  j["bound_den"] = b.bound.denominator();
  j["holds"] = b.holds;
  j["equality"] = b.equality;
  if (b.characterization_ok) j["characterization_ok"] = *b.characterization_ok;
  j["iff_ok"] = b.iff_ok;
  return j;
}

/// Stable report schema (version 1).
inline nlohmann::json to_json(const FullReport& r) {
  nlohmann::json ineq = nlohmann::json::array();
  for (const auto& rec : r.inequalities.records) ineq.push_back(to_json(rec));
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  return {{"schema", kReportSchemaVersion},
          {"graph", r.graph6},
          {"n", r.n},
          {"m", r.m},
          {"k", r.k},
          {"cd", r.partition.degree_complexity},
          {"max_degree", r.partition.max_degree},
          {"min_degree", r.partition.min_degree},
          {"counts", r.partition.counts},
          {"diameter", r.metrics.diameter},
          {"radius", r.metrics.radius},
          {"wiener", r.metrics.wiener},
          {"inequalities", ineq},
          {"eq5_eq6_equality_iff_cd2", r.inequalities.eq5_eq6_equality_iff_cd2},
          {"parity", to_json(r.parity)},
          {"divisibility", to_json(r.divisibility)},
          {"even_diameter", to_json(r.even_diameter)},
          {"diameter2_uniqueness", to_json(r.diameter2_uniqueness)},
          {"bounds", bounds},
          {"overall", r.overall},
          {"failures", r.failures()}};
}

inline constexpr const char* kCheckCsvHeader =
    "graph6,n,m,k,cd,max_degree,diameter,wiener,max_degree_equality,size_equality,"
    "wiener_equality,coprime_size_equality,overall,failures";

inline std::string csv_row(const FullReport& r) {
  std::ostringstream out;
  auto eq = [&](const char* id) -> std::string {
    for (const auto& b : r.bounds)
      if (b.id == id) return b.applicable ? (b.equality ? "1" : "0") : "NA";
    return "NA";
  };
  std::string fails;
  for (const auto& f : r.failures()) fails += (fails.empty() ? "" : ";") + f;
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.k << ','
      << r.partition.degree_complexity << ',' << r.partition.max_degree << ','
      << r.metrics.diameter << ',' << r.metrics.wiener << ',' << eq("max_degree") << ','
      << eq("size") << ',' << eq("wiener") << ',' << eq("coprime_size") << ','
      << (r.overall ? 1 : 0) << ',' << fails;
  return out.str();
}

}  // namespace stepwise
