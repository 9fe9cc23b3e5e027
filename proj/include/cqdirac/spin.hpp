#pragma once

/**
 * @file spin.hpp
 * @brief Spin as left multiplication, the S_z eigenbasis, the spin-direction
 * criterion, and the U(1) and quaternionic gauge transformations.
 *
 * In the rest frame the spin component along a unit vector e is
 * e·S = (@/2) n with n = i e_x + j e_y + k e_z, acting from the left on the
 * CQ amplitude ψ of Ψ = (ψ, ±ψ)ᵀ e^{∓@mt}. A state has a definite spin
 * direction exactly when ψ conj(ψ) = 0, i.e. when ψ is a null CQ.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cqdirac/cq.hpp"
#include "cqdirac/relativity.hpp"
#include "cqdirac/wave.hpp"

namespace cqdirac {

/// e·S for a real unit vector e.
class SpinOperator {
 public:
  /// Throws Error(BadDirection) unless |e| = 1.
  explicit SpinOperator(const Direction& e);

  static SpinOperator x() { return SpinOperator({1, 0, 0}); }
  static SpinOperator y() { return SpinOperator({0, 1, 0}); }
  static SpinOperator z() { return SpinOperator({0, 0, 1}); }

  const Direction& direction() const { return direction_; }
  /// The left multiplier (@/2) n.
  const CQ& multiplier() const { return multiplier_; }

  CQ operator()(const CQ& psi) const { return multiplier_ * psi; }

 private:
  Direction direction_;
  CQ multiplier_;
};

/// Ψ = (ψ, ±ψ)ᵀ e^{∓@mt}; always a Dirac solution.
struct RestFrameState {
  CQ amplitude;
  Species species = Species::Particle;
  double mass = 1.0;

  /// Ψ0 = (1, 1)ᵀ e^{-@mt}.
  static RestFrameState psi0(double mass = 1.0) { return {CQ::one(), Species::Particle, mass}; }

  PlaneWaveSpinorField field() const;
};

RestFrameState apply_spin(const SpinOperator& op, const RestFrameState& s);

enum class LadderSign { Raise, Lower };

/// S± = S_x ± @ S_y.
CQ ladder_multiplier(LadderSign sign);
RestFrameState ladder(LadderSign sign, const RestFrameState& s);

struct SpinBasisState {
  CQ amplitude;
  double m_z;
  /// 1 for span{(1+@k), (@i+j)}, 2 for span{(i+@j), (-@-k)}.
  int subspace;
  std::string label;
};

/// The S_z eigenamplitudes (1+@k), (i+@j) with m_z = +½ and
/// (@i+j), (-@-k) with m_z = -½, in that order.
const std::array<SpinBasisState, 4>& spin_basis();

/// Basis amplitudes of one of the two spin-closed subspaces.
std::array<CQ, 2> spin_subspace(int subspace);

/// Distance of ψ from a spin subspace, relative to |ψ|.
double subspace_residual(const CQ& psi, int subspace);

struct SpinDirection {
  Direction direction;
  /// ±½, with (@/2) n ψ = m_z ψ.
  double m_z;
};

/// The direction along which ψ has a definite spin, if any.
///
/// Null amplitudes (quadric ≈ 0, same threshold as invert) are solved for n
/// from the eight real equations n ψ = -@ψ in three unknowns; the result is
/// reported with the sign flipped so that (n_z, n_y, n_x) is
/// lexicographically non-negative. Non-null amplitudes return nullopt.
/// Throws Error(ZeroState) for ψ = 0.
std::optional<SpinDirection> has_spin_direction(const CQ& psi,
                                                double threshold = kNullThreshold);

/// Coefficients over spin_basis() order: ψ = Σ c_n basis_n.
std::array<Complex, 4> decompose_psi0(const CQ& psi);
CQ recompose(const std::array<Complex, 4>& coefficients);

/// Global right multiplication by e^{-nβ} = cos β - n sin β.
struct QuaternionGauge {
  Direction n{0, 0, 1};
  double beta = 0.0;

  CQ factor() const;
};

RestFrameState apply_quaternion_gauge(const QuaternionGauge& g, const RestFrameState& s);
PlaneWaveSpinorField apply_quaternion_gauge(const QuaternionGauge& g,
                                            const PlaneWaveSpinorField& psi);

/// Gauge function for Ψ -> Ψ e^{-@eα(q)}. Only linear α keeps plane waves
/// closed; a sampled α is representable but rejected by apply_u1_gauge.
struct U1Gauge {
  double charge = 0.0;
  std::variant<LinearScalarFunction, std::function<double(const MinkowskiVector&)>> alpha;
};

struct GaugedConfiguration {
  PlaneWaveSpinorField psi;
  PotentialField potential;
};

/// Ψ -> Ψ e^{-@eα}, A -> A + Dα. On e^{s@⟨p,q⟩} this shifts p by -s e a and
/// multiplies the amplitudes by e^{-@e·offset}.
GaugedConfiguration apply_u1_gauge(const U1Gauge& g, const PlaneWaveSpinorField& psi,
                                   const PotentialField& potential);

struct NormalDecomposition {
  Complex c;
  /// Real unit quaternion; its first non-zero coefficient (1, i, j, k order)
  /// is positive.
  CQ q;
};

/// Splits Σ with Σ conj(Σ)* = 1 into a unit complex number times a real unit
/// quaternion. Throws Error(NotNormal) otherwise.
NormalDecomposition decompose_normal(const CQ& sigma, double tol = 1e-10);

/// Compensating field X with X ψ = i ψ n, i.e. X = i ψ n ψ⁻¹. This is what
/// B - B' must be for the local gauge β(q) = x to be absorbed on state ψ.
CQ compensating_field(const CQ& psi, const Direction& n);

struct ObstructionRow {
  CQ first;
  CQ second;
  /// |X1 - X2| / max(|X1|, |X2|).
  double mismatch;
};

/// Scale-normalized mismatch between the compensating fields of two states.
double obstruction_mismatch(const CQ& first, const CQ& second, const Direction& n);

struct ObstructionReport {
  Direction n;
  std::vector<ObstructionRow> rows;
  /// Fraction of the generic random pairs whose mismatch exceeds 1e-3.
  double generic_positive_fraction = 0.0;
  std::size_t generic_pairs = 0;
};

/// Rows: identical states, complex-rescaled states, then `generic_pairs`
/// random invertible pairs drawn from `seed`.
ObstructionReport local_gauge_obstruction_demo(std::uint64_t seed = 0,
                                               std::size_t generic_pairs = 16);

/// Smallest out-of-subspace residual of ψ e^{-nβ} over the fixed grid:
/// n on a 32×32×32 cube lattice (normalized), β in 64 steps over [0, 2π).
double no_escape_floor(const CQ& psi, int subspace);

}  // namespace cqdirac
