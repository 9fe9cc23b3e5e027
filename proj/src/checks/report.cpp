#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cqdirac/checks.hpp"

namespace cqdirac::checks {

namespace {

// Keeps reports JSON-encodable when a check produces inf or NaN.
constexpr double kHuge = 1e300;

double finite_or_huge(double v) { return std::isfinite(v) ? v : kHuge; }

struct SuiteEntry {
  std::string_view name;
  double tolerance;
  CheckReport (*run)(const Options&);
};

constexpr SuiteEntry kSuites[] = {
    {"algebra", 1e-12, &algebra_suite},   {"lorentz", 1e-10, &lorentz_suite},
    {"dirac", 1e-10, &dirac_suite},       {"spin", 1e-10, &spin_suite},
    {"gauge", 1e-11, &gauge_suite},       {"lagrangian", 1e-11, &lagrangian_suite},
    {"chiral", 1e-10, &chiral_suite},
};

const SuiteEntry& find_suite(std::string_view name) {
  for (const auto& s : kSuites) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace

Recorder::Recorder(std::string suite, double default_tolerance, const Options& options) {
  report_.suite = std::move(suite);
  report_.cases = options.cases;
  report_.seed = options.seed;
  report_.tolerance = options.tolerance.value_or(default_tolerance);
  scale_ = report_.tolerance / default_tolerance;
}

void Recorder::residual(std::string name, std::size_t cases, double residual,
                        double tolerance) {
  report_.checks.push_back(
      {std::move(name), cases, finite_or_huge(residual), tolerance * scale_, false});
}

void Recorder::residual(std::string name, std::size_t cases, double residual) {
  this->residual(std::move(name), cases, residual, report_.tolerance / scale_);
}

void Recorder::floor(std::string name, std::size_t cases, double value, double floor) {
  const double r = value > 0 ? floor / value : kHuge;
  report_.checks.push_back({std::move(name), cases, finite_or_huge(r), 1.0, true});
}

void Recorder::all(std::string name, std::size_t cases, std::size_t held) {
  const double fraction = cases == 0 ? 1.0 : static_cast<double>(held) / cases;
  floor(std::move(name), cases, fraction, 1.0);
}

CheckReport Recorder::finish(std::int64_t elapsed_ms) && {
  double worst = 0.0;
  for (const auto& c : report_.checks) {
    if (!c.floor || !c.passed()) worst = std::max(worst, c.residual / c.tolerance);
  }
  report_.max_residual = finite_or_huge(report_.tolerance * worst);
  report_.passed = report_.max_residual <= report_.tolerance;
  report_.elapsed_ms = elapsed_ms;
  return std::move(report_);
}

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> names;
  for (const auto& s : kSuites) names.push_back(s.name);
  return names;
}

double default_tolerance(std::string_view suite) { return find_suite(suite).tolerance; }

CheckReport run_suite(std::string_view name, const Options& options) {
  return find_suite(name).run(options);
}

std::string to_ndjson(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["cases"] = report.cases;
  j["max_residual"] = report.max_residual;
  j["status"] = report.passed ? "pass" : "fail";
  j["seed"] = report.seed;
  return j.dump();
}

std::string to_table(const CheckReport& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "== %s  seed=%llu  tol=%.1e  %s  (%lld ms)\n",
                report.suite.c_str(), static_cast<unsigned long long>(report.seed),
                report.tolerance, report.passed ? "PASS" : "FAIL",
                static_cast<long long>(report.elapsed_ms));
  os << line;
  for (const auto& c : report.checks) {
    if (c.floor) {
      std::snprintf(line, sizeof(line), "  %-4s %-58s %6zu  floor/value=%-10.3e max=1\n",
                    c.passed() ? "ok" : "FAIL", c.name.c_str(), c.cases, c.residual);
    } else {
      std::snprintf(line, sizeof(line), "  %-4s %-58s %6zu  residual=%-10.3e tol=%.1e\n",
                    c.passed() ? "ok" : "FAIL", c.name.c_str(), c.cases, c.residual,
                    c.tolerance);
    }
    os << line;
  }
  std::snprintf(line, sizeof(line), "  max_residual=%.3e\n", report.max_residual);
  os << line;
  return os.str();
}

}  // namespace cqdirac::checks
