#pragma once

// The two-case constructive argument for "ψ conj(ψ) = 0 implies a spin
// direction", for ψ = a + c m + @ d m' with real a, c, d, real unit imaginary
// quaternions m, m', and a² + c² = d²:
//
//   c = 0:           n = m'
//   m m' + m' m = 0: n = (a + c m) m' / d
//
// Returns the candidate n (up to sign). Used only to cross-check the linear
// solver in has_spin_direction.

#include <optional>

#include "cqdirac/cq.hpp"

namespace cqdirac::oracle {

std::optional<CQ> constructive_spin_direction(double a, double c, double d, const CQ& m,
                                              const CQ& m_prime);

}  // namespace cqdirac::oracle
