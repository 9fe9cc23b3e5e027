#pragma once

// Pointwise Lagrangian densities of the CQ Dirac field coupled to an
// electromagnetic potential, and a periodic-box Riemann sum of the free
// action. ψ̄* below means complex_conj(quat_conj(ψ)).

#include <array>
#include <span>

#include "cqdirac/cq.hpp"
#include "cqdirac/relativity.hpp"
#include "cqdirac/wave.hpp"

namespace cqdirac {

/// A Dirac field given as a finite superposition of plane waves.
using SpinorWaves = std::span<const PlaneWaveSpinorField>;

/// L0 = tr(ψ̄1* conj(D)ψ1 + ψ̄2* Dψ2 - m ψ̄1*ψ2 - m ψ̄2*ψ1) at q.
Complex l0_density(SpinorWaves psi, double mass, const MinkowskiVector& q);
Complex l0_density(const PlaneWaveSpinorField& psi, double mass, const MinkowskiVector& q);

/// L_int = tr(@e ψ̄1* conj(A) ψ1 + @e ψ̄2* A ψ2) at q. Real for physical A.
Complex l_int_density(SpinorWaves psi, const PotentialField& potential, double charge,
                      const MinkowskiVector& q);
Complex l_int_density(const PlaneWaveSpinorField& psi, const PotentialField& potential,
                      double charge, const MinkowskiVector& q);

struct FieldStrength {
  CQ F;
};

/// F = ½(conj(D)A - conj(conj(D)A)), the vector part of conj(D)A.
FieldStrength field_strength(const PotentialField& potential, const MinkowskiVector& q);

/// ¼ scalar(F² + (F*)²) before discarding the (vanishing) imaginary part.
Complex la_density_complex(const PotentialField& potential, const MinkowskiVector& q);
double la_density(const PotentialField& potential, const MinkowskiVector& q);

/// L0 + L_int + L_A.
Complex lqed_density(SpinorWaves psi, const PotentialField& potential, double mass,
                     double charge, const MinkowskiVector& q);

/// Σ is a right-multiplication symmetry of L0 iff Σ conj(Σ)* = 1.
bool is_symmetry(const CQ& sigma, double tol = 1e-10);

/// Extents (T, X, Y, Z) of a periodic box anchored at the origin.
using Box = std::array<double, 4>;

/// Riemann sum of l0_density over an n⁴ uniform periodic grid, times the cell
/// volume. Every plane wave must close over the box:
/// E·T/2π, p_x·X/2π, p_y·Y/2π, p_z·Z/2π integers (to 1e-9), otherwise
/// Error(IncommensurateMomenta). The sum is exact once n exceeds the largest
/// frequency difference between waves.
Complex discrete_action(SpinorWaves psi, double mass, const Box& box, int points_per_axis);

}  // namespace cqdirac
