// cqcheck: run the seeded invariant suites and demos.
//
//   cqcheck run <suite|all> [--seed N] [--tol X] [--cases N] [--json] [--demo obstruction]
//
// Exit status: 0 when every suite passes, 1 when any fails, 2 on usage errors.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "cqdirac/checks.hpp"
#include "cqdirac/spin.hpp"

namespace {

void print_obstruction(std::FILE* out, std::uint64_t seed) {
  const auto report = cqdirac::local_gauge_obstruction_demo(seed);
  std::fprintf(out, "local quaternionic gauge beta(q) = x, n = (%.6f, %.6f, %.6f)\n", report.n[0],
               report.n[1], report.n[2]);
  std::fprintf(out, "compensating field X = i psi n psi^-1 for each state\n");
  std::fprintf(out, "%-4s %-12s %s\n", "row", "pair", "mismatch |X1-X2|/max(|X1|,|X2|)");
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const char* kind = r == 0 ? "identical" : r == 1 ? "rescaled" : "generic";
    std::fprintf(out, "%-4zu %-12s %.6e\n", r, kind, report.rows[r].mismatch);
  }
  std::fprintf(out, "generic pairs with mismatch > 1e-3: %.0f%% of %zu\n",
               100.0 * report.generic_positive_fraction, report.generic_pairs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-quaternion Dirac invariant checks"};
  app.require_subcommand(1);

  std::vector<std::string> choices{"all"};
  for (auto name : cqdirac::checks::suite_names()) choices.emplace_back(name);

  std::string suite;
  cqdirac::checks::Options options;
  double tolerance = 0.0;
  bool json = false;
  std::string demo;

  auto* run = app.add_subcommand("run", "Run one suite or all of them");
  run->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(choices));
  run->add_option("--seed", options.seed, "PRNG seed (default 0)");
  auto* tol = run->add_option("--tol", tolerance, "Override the suite tolerance")
                  ->check(CLI::PositiveNumber);
  run->add_option("--cases", options.cases, "Randomized cases per check (default 1000)")
      ->check(CLI::PositiveNumber);
  run->add_flag("--json", json, "Emit one NDJSON report per suite");
  run->add_option("--demo", demo, "Also run a demo")->check(CLI::IsMember({"obstruction"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (tol->count() > 0) options.tolerance = tolerance;

  std::vector<std::string> suites;
  if (suite == "all") {
    for (auto name : cqdirac::checks::suite_names()) suites.emplace_back(name);
  } else {
    suites.push_back(suite);
  }

  bool passed = true;
  for (const auto& name : suites) {
    const auto report = cqdirac::checks::run_suite(name, options);
    passed = passed && report.passed;
    if (json) {
      std::cout << cqdirac::checks::to_ndjson(report) << '\n';
    } else {
      std::cout << cqdirac::checks::to_table(report);
    }
    if (!report.passed) std::cerr << "cqcheck: suite '" << name << "' failed\n";
  }
  std::cout.flush();

  if (demo == "obstruction") print_obstruction(json ? stderr : stdout, options.seed);
  return passed ? 0 : 1;
}
