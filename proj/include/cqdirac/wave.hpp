#pragma once

/**
 * @file wave.hpp
 * @brief The differential operator D = @∂t - i∂x - j∂y - k∂z on a closed
 * family of fields, and the Klein–Gordon / Dirac residuals.
 *
 * D is applied analytically. On a plane wave ψ e^{s@⟨p,q⟩} (ψ a constant
 * CQ, s = ±1) it acts as left multiplication of the amplitude by s@p, and
 * conj(D) by s@conj(p). On affine fields it yields a constant. Arbitrary
 * sampled fields may be evaluated but not differentiated.
 *
 * Phase convention: particles carry e^{-@⟨p,q⟩} with E > 0, antiparticles
 * e^{+@⟨p,q⟩}, so the rest-frame solutions are (ψ, ±ψ) e^{∓@mt}.
 */

#include <array>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "cqdirac/cq.hpp"
#include "cqdirac/relativity.hpp"

namespace cqdirac {

/// The s in e^{s@⟨p,q⟩}.
enum class PhaseSign : int { Negative = -1, Positive = 1 };

enum class Species { Particle, Antiparticle };

constexpr PhaseSign phase_sign(Species s) {
  return s == Species::Particle ? PhaseSign::Negative : PhaseSign::Positive;
}
constexpr double to_double(PhaseSign s) { return static_cast<int>(s); }

/// ψ e^{s@⟨p,q⟩} with a constant CQ amplitude.
struct PlaneWave {
  CQ amplitude;
  MinkowskiVector momentum;
  PhaseSign sign = PhaseSign::Negative;

  Complex phase_at(const MinkowskiVector& q) const;
  CQ evaluate(const MinkowskiVector& q) const { return amplitude * phase_at(q); }
};

/// Φ(q) = a e^{s@⟨p,q⟩}, an ordinary complex function.
struct PlaneWaveScalarField {
  Complex amplitude{1.0, 0.0};
  MinkowskiVector momentum;
  PhaseSign sign = PhaseSign::Positive;

  Complex evaluate(const MinkowskiVector& q) const;
  operator PlaneWave() const { return {CQ::scalar(amplitude), momentum, sign}; }
};

/// α(q) = ⟨a, q⟩ + offset.
struct LinearScalarFunction {
  MinkowskiVector gradient;
  double offset = 0.0;

  double operator()(const MinkowskiVector& q) const;
};

/// f(q) = offset + slope[0] t + slope[1] x + slope[2] y + slope[3] z.
struct LinearField {
  CQ offset;
  std::array<CQ, 4> slope{};

  /// The coordinate function f(q) = q.
  static LinearField coordinate();
  static LinearField from(const LinearScalarFunction& alpha);

  CQ evaluate(const MinkowskiVector& q) const;
};

/// An arbitrary field. It can be evaluated but lies outside the closed
/// family, so apply_D rejects it.
struct SampledField {
  std::function<CQ(const MinkowskiVector&)> fn;
};

using Field = std::variant<CQ, LinearField, PlaneWave, SampledField>;

CQ evaluate(const Field& f, const MinkowskiVector& q);

/// D f. Throws Error(UnsupportedField) for SampledField.
Field apply_D(const Field& f);
/// conj(D) f = (@∂t + i∂x + j∂y + k∂z) f.
Field apply_Dbar(const Field& f);
/// D α is the constant gradient a.
CQ apply_D(const LinearScalarFunction& alpha);

/// Electromagnetic potential A = @φ + iA_x + jA_y + kA_z: a constant plus
/// a finite sum of plane waves.
struct PotentialField {
  CQ constant;
  std::vector<PlaneWave> waves;

  static PotentialField uniform(const CQ& a) { return {a, {}}; }
  /// ε cos(⟨k,q⟩ + δ) with a real polarization ε; physical (A* = -conj(A)).
  static PotentialField real_wave(const MinkowskiVector& polarization,
                                  const MinkowskiVector& wave_vector, double shift);

  bool is_constant() const { return waves.empty(); }
  CQ evaluate(const MinkowskiVector& q) const;
  /// conj(D) A at q.
  CQ dbar_at(const MinkowskiVector& q) const;

  friend PotentialField operator+(PotentialField a, const CQ& shift) {
    a.constant += shift;
    return a;
  }
  friend PotentialField operator*(double s, PotentialField a);
};

/// Two-component CQ spinor values or amplitudes (ψ1, ψ2).
struct SpinorPair {
  CQ upper;
  CQ lower;

  double max_abs() const;
  friend SpinorPair operator-(const SpinorPair& a, const SpinorPair& b) {
    return {a.upper - b.upper, a.lower - b.lower};
  }
  friend bool operator==(const SpinorPair&, const SpinorPair&) = default;
};

/// Ψ(q) = (ψ1, ψ2)ᵀ e^{s@⟨p,q⟩}.
struct PlaneWaveSpinorField {
  CQ psi1;
  CQ psi2;
  MinkowskiVector momentum;
  PhaseSign sign = PhaseSign::Negative;
  double mass = 0.0;

  Complex phase_at(const MinkowskiVector& q) const;
  SpinorPair evaluate(const MinkowskiVector& q) const;
  SpinorPair amplitudes() const { return {psi1, psi2}; }
};

/// |scalar(p conj(p)) + m²| <= 1e-9 · max(1, E²).
bool is_on_shell(const MinkowskiVector& p, double mass);

/// (-conj(D)D + m²)Φ with the phase factored out:
/// (scalar(conj(p) p) + m²) · amplitude.
Complex klein_gordon_residual(const PlaneWaveScalarField& f, double mass);

/// Applies ((-μ, D_A), (conj(D_A), -μ)) to Ψ and returns the amplitude pair
/// (phase factored out), with D_A = D + @eA and conj(D_A) = conj(D) + @e conj(A)
/// for a constant A. μ is passed explicitly so the partner operator (μ = -m)
/// is available for the iteration identity.
SpinorPair dirac_operator(const PlaneWaveSpinorField& psi, double mass_term,
                          const CQ& potential = CQ{}, double charge = 0.0);

/// dirac_operator with μ = psi.mass. A plane-wave potential does not keep
/// the family closed and throws Error(UnsupportedField).
SpinorPair dirac_residual(const PlaneWaveSpinorField& psi,
                          const std::optional<PotentialField>& potential = std::nullopt,
                          double charge = 0.0);

/// The on-shell plane wave with upper amplitude φ and lower amplitude
/// ∓(1/m) @ conj(p) φ. Throws Error(OffShell) or Error(MasslessUnsupported).
PlaneWaveSpinorField make_solution(const MinkowskiVector& p, double mass,
                                   Species species, const CQ& phi);

/// ψ1 -> ωψ1, ψ2 -> ω*ψ2, p -> ω p conj(ω)*.
PlaneWaveSpinorField transform_spinor(const LorentzRotor& rotor,
                                      const PlaneWaveSpinorField& psi);

}  // namespace cqdirac
