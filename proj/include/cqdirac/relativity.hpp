#pragma once

/**
 * @file relativity.hpp
 * @brief Minkowski space as the purely imaginary CQs, Lorentz rotors.
 *
 * An event or four-momentum is q = @t + ix + jy + kz with real t, x, y, z.
 * A Lorentz transformation is the sandwich q -> ω q conj(ω)* with a unit CQ
 * ω (ω conj(ω) = 1); covariant quantities conj(q) transform as
 * conj(q) -> ω* conj(q) conj(ω).
 */

#include <array>
#include <string_view>

#include "cqdirac/cq.hpp"

namespace cqdirac {

/// A purely imaginary CQ @t + ix + jy + kz with real t, x, y, z.
class MinkowskiVector {
 public:
  constexpr MinkowskiVector() = default;
  constexpr MinkowskiVector(double t, double x, double y, double z)
      : t_(t), x_(x), y_(y), z_(z) {}

  /// Validates the shape of q. Off-shape coefficients below 1e-12·scale are
  /// clamped to zero; anything larger throws Error(NotMinkowski).
  static MinkowskiVector from_cq(const CQ& q);

  constexpr double t() const { return t_; }
  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }
  /// Alias for the time component of a four-momentum.
  constexpr double energy() const { return t_; }
  constexpr std::array<double, 4> components() const { return {t_, x_, y_, z_}; }

  CQ cq() const { return {0, t_, x_, 0, y_, 0, z_, 0}; }
  operator CQ() const { return cq(); }

  friend constexpr MinkowskiVector operator+(const MinkowskiVector& a,
                                             const MinkowskiVector& b) {
    return {a.t_ + b.t_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
  }
  friend constexpr MinkowskiVector operator-(const MinkowskiVector& a,
                                             const MinkowskiVector& b) {
    return {a.t_ - b.t_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
  }
  friend constexpr MinkowskiVector operator*(double s, const MinkowskiVector& a) {
    return {s * a.t_, s * a.x_, s * a.y_, s * a.z_};
  }
  friend constexpr bool operator==(const MinkowskiVector&,
                                   const MinkowskiVector&) = default;

 private:
  double t_ = 0, x_ = 0, y_ = 0, z_ = 0;
};

/// ⟨p, q⟩ = Et - p·x, computed as -½ scalar(conj(p) q + conj(q) p).
double scalar_product(const MinkowskiVector& p, const MinkowskiVector& q);
/// Same, for arbitrary CQs; throws Error(NotMinkowski) unless both are
/// purely imaginary with real coefficients.
double scalar_product(const CQ& p, const CQ& q);

/// -conj(q) q = t² - x² - y² - z².
double proper_time_sq(const MinkowskiVector& q);
double proper_time_sq(const CQ& q);

/// A real unit vector (n_x, n_y, n_z), read as n = i n_x + j n_y + k n_z.
using Direction = std::array<double, 3>;

/// Validates |n| = 1 to 1e-12; throws Error(BadDirection) otherwise.
CQ direction_quaternion(const Direction& n);

class LorentzRotor {
 public:
  enum class Kind { Rotation, Boost, Composite };

  /// The identity transformation.
  LorentzRotor() : omega_(CQ::one()), kind_(Kind::Composite) {}

  /// ω = cos(θ/2) + n sin(θ/2).
  static LorentzRotor rotation(const Direction& n, double angle);
  /// ω = cosh(Λ/2) + @n sinh(Λ/2).
  static LorentzRotor boost(const Direction& n, double rapidity);
  /// Wraps an arbitrary ω; throws Error(BadRotor) unless ω conj(ω) = 1.
  static LorentzRotor from_omega(const CQ& omega, double tol = 1e-10);

  const CQ& omega() const { return omega_; }
  Kind kind() const { return kind_; }
  /// Generating direction and angle/rapidity. Informational only for
  /// composites, which carry no canonical factorization.
  const Direction& direction() const { return direction_; }
  double parameter() const { return parameter_; }

  /// Composition: (a * b) applies b first, then a.
  friend LorentzRotor operator*(const LorentzRotor& a, const LorentzRotor& b);

 private:
  LorentzRotor(const CQ& omega, Kind kind, const Direction& n, double parameter)
      : omega_(omega), kind_(kind), direction_(n), parameter_(parameter) {}

  CQ omega_;
  Kind kind_;
  Direction direction_{0, 0, 0};
  double parameter_ = 0;
};

std::string_view to_string(LorentzRotor::Kind kind);

/// q' = ω q conj(ω)*. Throws Error(BadRotor) if ω is not unit.
MinkowskiVector apply_lorentz(const LorentzRotor& rotor, const MinkowskiVector& q);
/// Same, for CQ fields that transform like vectors (e.g. potentials).
CQ apply_lorentz(const LorentzRotor& rotor, const CQ& q);

/// conj(q)' = ω* conj(q) conj(ω).
CQ apply_covariant(const LorentzRotor& rotor, const CQ& qbar);

}  // namespace cqdirac
