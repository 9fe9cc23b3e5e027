#pragma once

/**
 * @file checks.hpp
 * @brief Named, seeded invariant suites behind the `cqcheck` CLI and the
 * acceptance binary.
 *
 * A suite is a list of checks. Each check carries its own tolerance:
 *
 *  - residual checks pass when residual <= tolerance;
 *  - floor checks pass when an observed value reaches a floor, and are
 *    recorded as residual = floor / value against tolerance 1.
 *
 * The suite's max_residual is expressed in units of the suite tolerance,
 * suite_tol · max(residual / tolerance) over the residual checks and any
 * failed floor checks, so the suite passes exactly when max_residual <= suite_tol. Overriding the suite tolerance rescales the
 * residual checks proportionally; floors are fixed.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cqdirac::checks {

struct Options {
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
  std::optional<double> tolerance;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool floor = false;  // residual is floor/value
  bool passed() const { return residual <= tolerance; }
};

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<CheckResult> checks;
};

/// Collects check results for one suite.
class Recorder {
 public:
  Recorder(std::string suite, double default_tolerance, const Options& options);

  /// Residual check; `tolerance` is the value at the default suite tolerance.
  void residual(std::string name, std::size_t cases, double residual, double tolerance);
  /// Same, using the suite tolerance.
  void residual(std::string name, std::size_t cases, double residual);
  /// Passes when value >= floor.
  void floor(std::string name, std::size_t cases, double value, double floor);
  /// Passes when the predicate held in every case.
  void all(std::string name, std::size_t cases, std::size_t held);

  CheckReport finish(std::int64_t elapsed_ms) &&;

 private:
  CheckReport report_;
  double scale_;
};

std::vector<std::string_view> suite_names();
double default_tolerance(std::string_view suite);

/// Throws std::invalid_argument for an unknown name.
CheckReport run_suite(std::string_view name, const Options& options);

CheckReport algebra_suite(const Options& options);
CheckReport lorentz_suite(const Options& options);
CheckReport dirac_suite(const Options& options);
CheckReport spin_suite(const Options& options);
CheckReport gauge_suite(const Options& options);
CheckReport lagrangian_suite(const Options& options);
CheckReport chiral_suite(const Options& options);

/// Ranks of the rest-frame solution spaces.
struct SolutionCounts {
  int particle_real_rank = 0;                // expected 8
  int particle_complex_rank = 0;             // expected 4
  int particle_antiparticle_complex_rank = 0;  // expected 8
  int eigenspace_complex_rank[2] = {0, 0};   // m_z = +½, -½; expected 2 each
  int restricted_complex_rank = 0;           // one spin subspace; expected 2
  int restricted_eigenspace_rank[2] = {0, 0};  // expected 1 each
};
SolutionCounts count_rest_frame_solutions();

/// One NDJSON line: {"suite","cases","max_residual","status","seed"}.
std::string to_ndjson(const CheckReport& report);
/// Human-readable table.
std::string to_table(const CheckReport& report);

}  // namespace cqdirac::checks
