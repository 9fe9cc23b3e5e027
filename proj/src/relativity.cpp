#include "cqdirac/relativity.hpp"

#include <algorithm>
#include <cmath>

#include "cqdirac/error.hpp"

namespace cqdirac {

namespace {

constexpr double kShapeTolerance = 1e-12;
constexpr double kDirectionTolerance = 1e-12;
constexpr double kRotorTolerance = 1e-9;

// |ω conj(ω) - 1| relative to |ω|², which grows like cosh Λ for boosts.
double unitality_defect(const CQ& omega) {
  const double n = omega.norm();
  return distance(omega * quat_conj(omega), CQ::one()) / std::max(1.0, n * n);
}

void require_unit(const CQ& omega) {
  if (unitality_defect(omega) > kRotorTolerance) {
    throw Error(Errc::BadRotor, "ω conj(ω) != 1 for ω = " + to_string(omega),
                unitality_defect(omega));
  }
}

}  // namespace

MinkowskiVector MinkowskiVector::from_cq(const CQ& q) {
  const double scale = std::max(1.0, q.max_abs());
  const double off = std::max({std::abs(q.w()), std::abs(q.xI()),
                               std::abs(q.yI()), std::abs(q.zI())});
  if (off >= kShapeTolerance * scale) {
    throw Error(Errc::NotMinkowski, to_string(q) + " is not of the form @t+ix+jy+kz",
                off);
  }
  return {q.wI(), q.x(), q.y(), q.z()};
}

double scalar_product(const MinkowskiVector& p, const MinkowskiVector& q) {
  const CQ a = p.cq(), b = q.cq();
  return -0.5 * (quat_conj(a) * b + quat_conj(b) * a).scalar_part().real();
}

double scalar_product(const CQ& p, const CQ& q) {
  return scalar_product(MinkowskiVector::from_cq(p), MinkowskiVector::from_cq(q));
}

double proper_time_sq(const MinkowskiVector& q) {
  const CQ a = q.cq();
  return -(quat_conj(a) * a).scalar_part().real();
}

double proper_time_sq(const CQ& q) { return proper_time_sq(MinkowskiVector::from_cq(q)); }

CQ direction_quaternion(const Direction& n) {
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!std::isfinite(len) || std::abs(len - 1.0) > kDirectionTolerance) {
    throw Error(Errc::BadDirection, "direction is not a real unit vector",
                std::abs(len - 1.0));
  }
  return CQ::quaternion(0, n[0], n[1], n[2]);
}

LorentzRotor LorentzRotor::rotation(const Direction& n, double angle) {
  const CQ u = direction_quaternion(n);
  return {std::cos(angle / 2) * CQ::one() + std::sin(angle / 2) * u, Kind::Rotation,
          n, angle};
}

LorentzRotor LorentzRotor::boost(const Direction& n, double rapidity) {
  const CQ u = direction_quaternion(n);
  return {std::cosh(rapidity / 2) * CQ::one() + std::sinh(rapidity / 2) * (CQ::at() * u),
          Kind::Boost, n, rapidity};
}

LorentzRotor LorentzRotor::from_omega(const CQ& omega, double tol) {
  if (unitality_defect(omega) > tol) {
    throw Error(Errc::BadRotor, "ω conj(ω) != 1 for ω = " + to_string(omega),
                unitality_defect(omega));
  }
  return {omega, Kind::Composite, {0, 0, 0}, 0};
}

LorentzRotor operator*(const LorentzRotor& a, const LorentzRotor& b) {
  return {a.omega_ * b.omega_, LorentzRotor::Kind::Composite, {0, 0, 0}, 0};
}

std::string_view to_string(LorentzRotor::Kind kind) {
  switch (kind) {
    case LorentzRotor::Kind::Rotation: return "rotation";
    case LorentzRotor::Kind::Boost: return "boost";
    case LorentzRotor::Kind::Composite: return "composite";
  }
  return "unknown";
}

CQ apply_lorentz(const LorentzRotor& rotor, const CQ& q) {
  const CQ& w = rotor.omega();
  require_unit(w);
  return w * q * complex_conj(quat_conj(w));
}

MinkowskiVector apply_lorentz(const LorentzRotor& rotor, const MinkowskiVector& q) {
  return MinkowskiVector::from_cq(apply_lorentz(rotor, q.cq()));
}

CQ apply_covariant(const LorentzRotor& rotor, const CQ& qbar) {
  const CQ& w = rotor.omega();
  require_unit(w);
  return complex_conj(w) * qbar * quat_conj(w);
}

}  // namespace cqdirac
