#pragma once

// Reproducible sampling for the check suites.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Uniform and normal variates are derived here rather than through
// <random> distributions, whose algorithms are implementation-defined, so a
// seed yields the same residual stream on every platform.

#include <array>
#include <cstdint>
#include <random>

#include "cqdirac/cq.hpp"

namespace cqdirac {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box–Muller.
  double normal();

  /// Uniform on the unit sphere: three normals, normalized, rejecting
  /// norms below 1e-8.
  std::array<double, 3> direction();

  /// Eight independent standard normal coefficients.
  CQ cq();
  Complex complex();
  /// Real quaternion with unit norm.
  CQ unit_quaternion();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cqdirac
