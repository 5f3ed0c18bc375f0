#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace stepwise::cli;
  CLI::App app{"stepwise: k-stepwise irregular graph toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "verify every inequality and bound on each input graph");
  auto* construct = app.add_subcommand("construct", "build a family member and emit it");
  auto* enumerate = app.add_subcommand("enumerate", "stream connected (k-SI) graphs of given orders");
  auto* survey = app.add_subcommand("survey", "extremal census table over (n, k) ranges");
  auto* convert = app.add_subcommand("convert", "translate between graph6, DOT and edge lists");

  for (auto* sub : {check, construct}) sub->add_option("--family", cfg.family, "family spec, e.g. gamma:3,4");
  for (auto* sub : {check, convert}) sub->add_option("--in", cfg.input, "input file, - for stdin");
  for (auto* sub : {check, enumerate}) sub->add_option("--k", cfg.k, "edge imbalance");

  check->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));
  construct->add_option("--format", cfg.format)
      ->check(CLI::IsMember({"text", "json", "graph6", "dot", "edges"}));

  enumerate->add_option("--n", cfg.n_range, "order or range a..b")->required();
  enumerate->add_option("--out", cfg.output, "graph6 stream file (default stdout)");
  enumerate->add_option("--summary-csv", cfg.summary_csv, "write n,k,count,max_delta,max_m");

  survey->add_option("--n", cfg.n_range, "order range a..b")->required();
  survey->add_option("--k", cfg.k_range, "step range a..b")->required();
  survey->add_option("--out", cfg.output, "CSV file (default stdout)");

  for (auto* sub : {enumerate, survey}) {
    sub->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
    sub->add_option("--max-n", cfg.max_n, "enumeration ceiling (at most 16)");
  }

  convert->add_option("--from", cfg.from)->check(CLI::IsMember({"g6", "dot", "edges"}));
  convert->add_option("--to", cfg.to)->required()->check(CLI::IsMember({"g6", "dot", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  return run(app.get_subcommands().front()->get_name(), cfg, std::cout, std::cerr);
}
