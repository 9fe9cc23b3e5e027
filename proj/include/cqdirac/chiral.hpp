#pragma once

// Map between CQ spinor amplitudes restricted to the first spin subspace and
// four-component chiral spinors:
//
//   ψ1 = (1+@k) c1 + (@i+j) c2,   ψ2 = (1+@k) c3 + (@i+j) c4.
//
// Left multiplication by i, j, k acts on (c1, c2) as -𝕚σ1, -𝕚σ2, -𝕚σ3, which
// turns the CQ Dirac equation into the chiral γ-matrix equation.

#include "cqdirac/cq.hpp"
#include "cqdirac/gamma.hpp"
#include "cqdirac/wave.hpp"

namespace cqdirac::chiral {

/// Throws Error(NotInSubspace), residual attached, unless both amplitudes lie
/// in span{(1+@k), (@i+j)} to within tol (relative to the amplitude scale).
ChiralSpinor cq_to_chiral(const SpinorPair& psi, double tol = 1e-10);
SpinorPair chiral_to_cq(const ChiralSpinor& c);

FourMomentum four_momentum(const MinkowskiVector& p);

/// The CQ plane wave whose amplitudes are chiral_to_cq(c).
PlaneWaveSpinorField to_field(const ChiralSpinor& c, const MinkowskiVector& p, double mass,
                              PhaseSign sign);

}  // namespace cqdirac::chiral
