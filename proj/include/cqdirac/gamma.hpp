#pragma once

// Standard four-component Dirac equation in the chiral representation,
//
//   γ⁰ = [[0, 1], [1, 0]],  γⁱ = [[0, σⁱ], [-σⁱ, 0]],
//
// written with plain complex 4×4 matrices. Nothing here touches the CQ
// types: it is the independent side of the CQ <-> chiral equivalence check.

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cqdirac::chiral {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;

/// (c1, c2, c3, c4), the amplitude of C(q) = (c1..c4)ᵀ e^{s@⟨p,q⟩}.
using ChiralSpinor = std::array<Complex, 4>;

/// Contravariant (E, p_x, p_y, p_z).
struct FourMomentum {
  double E, px, py, pz;
};

struct GammaSet {
  std::array<Matrix4, 4> gamma;

  static const GammaSet& chiral();
};

/// Minkowski metric diag(1, -1, -1, -1).
double metric(int mu, int nu);

/// (@γ^μ∂_μ - m) C with ∂_μ -> s@p_μ on the shared phase, i.e.
/// (-s γ^μ p_μ - m) C. `phase_sign` is s = ±1.
ChiralSpinor chiral_dirac_residual(const ChiralSpinor& c, const FourMomentum& p,
                                   double mass, int phase_sign);

/// Solves the lower half of the chiral equation for (c3, c4) given (c1, c2).
ChiralSpinor chiral_solution(const FourMomentum& p, double mass, int phase_sign,
                             Complex c1, Complex c2);

struct AnticommutatorEntry {
  int mu, nu;
  double deviation;  // max |{γ^μ, γ^ν} - 2η^{μν} I|
};

struct GammaAlgebraReport {
  std::vector<AnticommutatorEntry> entries;  // the 10 pairs μ <= ν
  double max_deviation = 0.0;
};

GammaAlgebraReport gamma_algebra_check(const GammaSet& set = GammaSet::chiral());

double max_abs(const ChiralSpinor& c);

}  // namespace cqdirac::chiral
