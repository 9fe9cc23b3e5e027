#pragma once

// Shared sampling and comparison helpers for the check suites.

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cqdirac/checks.hpp"
#include "cqdirac/cq.hpp"
#include "cqdirac/random.hpp"
#include "cqdirac/relativity.hpp"
#include "cqdirac/wave.hpp"

namespace cqdirac::checks::detail {

/// Max-abs difference relative to max(1, scale of either side).
inline double rel(const CQ& a, const CQ& b) {
  return distance(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

inline double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double rel(const SpinorPair& a, const SpinorPair& b) {
  return std::max(rel(a.upper, b.upper), rel(a.lower, b.lower));
}

inline MinkowskiVector random_vector(Rng& rng) {
  const double t = rng.normal(), x = rng.normal(), y = rng.normal(), z = rng.normal();
  return {t, x, y, z};
}

/// Rotation with θ in [0, 2π) or boost with Λ in [-1, 1], equally likely.
inline LorentzRotor random_elementary_rotor(Rng& rng) {
  const Direction n = rng.direction();
  if (rng.uniform() < 0.5) return LorentzRotor::rotation(n, rng.uniform(0, 6.283185307179586));
  return LorentzRotor::boost(n, rng.uniform(-1, 1));
}

/// Product of 1 to 4 elementary rotors.
inline LorentzRotor random_rotor(Rng& rng) {
  const int factors = 1 + static_cast<int>(rng.uniform() * 4);
  LorentzRotor r = random_elementary_rotor(rng);
  for (int f = 1; f < factors; ++f) r = random_elementary_rotor(rng) * r;
  return r;
}

inline double random_mass(Rng& rng) { return rng.uniform(0.5, 2.0); }

/// On-shell momentum with E > 0 and |p| uniform in [0, 10 m].
inline MinkowskiVector random_on_shell(Rng& rng, double mass) {
  const Direction n = rng.direction();
  const double p = rng.uniform(0, 10 * mass);
  return {std::sqrt(p * p + mass * mass), p * n[0], p * n[1], p * n[2]};
}

/// Scale for Dirac residuals of a plane wave: amplitude size times the
/// largest of m and the momentum components.
inline double dirac_scale(const PlaneWaveSpinorField& psi) {
  const auto c = psi.momentum.components();
  double pmax = psi.mass;
  for (double v : c) pmax = std::max(pmax, std::abs(v));
  return std::max(1.0, std::max(psi.psi1.max_abs(), psi.psi2.max_abs()) * pmax);
}

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace cqdirac::checks::detail
