#include "cqdirac/wave.hpp"

#include <algorithm>
#include <cmath>

#include "cqdirac/error.hpp"

namespace cqdirac {

namespace {

constexpr double kOnShellTolerance = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// D acts on e^{s@⟨p,q⟩} as left multiplication by s@p; conj(D) by s@conj(p).
CQ d_symbol(const MinkowskiVector& p, PhaseSign sign, bool bar) {
  const CQ pc = bar ? quat_conj(p.cq()) : p.cq();
  return to_double(sign) * (CQ::at() * pc);
}

Field differentiate(const Field& f, bool bar) {
  const double s = bar ? 1.0 : -1.0;
  return std::visit(
      Overloaded{
          [](const CQ&) -> Field { return CQ{}; },
          [&](const LinearField& g) -> Field {
            return CQ::at() * g.slope[0] + s * (CQ::i() * g.slope[1]) +
                   s * (CQ::j() * g.slope[2]) + s * (CQ::k() * g.slope[3]);
          },
          [&](const PlaneWave& w) -> Field {
            return PlaneWave{d_symbol(w.momentum, w.sign, bar) * w.amplitude,
                             w.momentum, w.sign};
          },
          [](const SampledField&) -> Field {
            throw Error(Errc::UnsupportedField,
                        "sampled fields are outside the differentiable family");
          },
      },
      f);
}

}  // namespace

Complex PlaneWave::phase_at(const MinkowskiVector& q) const {
  return phase(to_double(sign) * scalar_product(momentum, q));
}

Complex PlaneWaveScalarField::evaluate(const MinkowskiVector& q) const {
  return amplitude * phase(to_double(sign) * scalar_product(momentum, q));
}

double LinearScalarFunction::operator()(const MinkowskiVector& q) const {
  return scalar_product(gradient, q) + offset;
}

LinearField LinearField::coordinate() {
  return {CQ{}, {CQ::at(), CQ::i(), CQ::j(), CQ::k()}};
}

LinearField LinearField::from(const LinearScalarFunction& alpha) {
  const MinkowskiVector& a = alpha.gradient;
  return {CQ::scalar(alpha.offset),
          {CQ::scalar(a.t()), CQ::scalar(-a.x()), CQ::scalar(-a.y()),
           CQ::scalar(-a.z())}};
}

CQ LinearField::evaluate(const MinkowskiVector& q) const {
  return offset + q.t() * slope[0] + q.x() * slope[1] + q.y() * slope[2] +
         q.z() * slope[3];
}

CQ evaluate(const Field& f, const MinkowskiVector& q) {
  return std::visit(Overloaded{
                        [](const CQ& c) { return c; },
                        [&](const LinearField& g) { return g.evaluate(q); },
                        [&](const PlaneWave& w) { return w.evaluate(q); },
                        [&](const SampledField& g) { return g.fn(q); },
                    },
                    f);
}

Field apply_D(const Field& f) { return differentiate(f, false); }
Field apply_Dbar(const Field& f) { return differentiate(f, true); }
CQ apply_D(const LinearScalarFunction& alpha) { return alpha.gradient.cq(); }

PotentialField PotentialField::real_wave(const MinkowskiVector& polarization,
                                         const MinkowskiVector& wave_vector,
                                         double shift) {
  // ε cos(θ + δ) = ε e^{@δ}/2 · e^{@θ} + ε e^{-@δ}/2 · e^{-@θ}
  const CQ eps = polarization.cq();
  return {CQ{},
          {PlaneWave{eps * (0.5 * phase(shift)), wave_vector, PhaseSign::Positive},
           PlaneWave{eps * (0.5 * phase(-shift)), wave_vector, PhaseSign::Negative}}};
}

CQ PotentialField::evaluate(const MinkowskiVector& q) const {
  CQ sum = constant;
  for (const auto& w : waves) sum += w.evaluate(q);
  return sum;
}

CQ PotentialField::dbar_at(const MinkowskiVector& q) const {
  CQ sum;
  for (const auto& w : waves) sum += d_symbol(w.momentum, w.sign, true) * w.evaluate(q);
  return sum;
}

PotentialField operator*(double s, PotentialField a) {
  a.constant *= s;
  for (auto& w : a.waves) w.amplitude *= s;
  return a;
}

double SpinorPair::max_abs() const { return std::max(upper.max_abs(), lower.max_abs()); }

Complex PlaneWaveSpinorField::phase_at(const MinkowskiVector& q) const {
  return phase(to_double(sign) * scalar_product(momentum, q));
}

SpinorPair PlaneWaveSpinorField::evaluate(const MinkowskiVector& q) const {
  const Complex ph = phase_at(q);
  return {psi1 * ph, psi2 * ph};
}

bool is_on_shell(const MinkowskiVector& p, double mass) {
  const double defect = (p.cq() * quat_conj(p.cq())).scalar_part().real() + mass * mass;
  return std::abs(defect) <= kOnShellTolerance * std::max(1.0, p.energy() * p.energy());
}

Complex klein_gordon_residual(const PlaneWaveScalarField& f, double mass) {
  // -conj(D) D -> -(s@conj(p))(s@p) = conj(p) p
  const CQ p = f.momentum.cq();
  return ((quat_conj(p) * p).scalar_part() + mass * mass) * f.amplitude;
}

SpinorPair dirac_operator(const PlaneWaveSpinorField& psi, double mass_term,
                          const CQ& potential, double charge) {
  const CQ coupling = charge * (CQ::at() * potential);
  const CQ coupling_bar = charge * (CQ::at() * quat_conj(potential));
  const CQ d = d_symbol(psi.momentum, psi.sign, false) + coupling;
  const CQ dbar = d_symbol(psi.momentum, psi.sign, true) + coupling_bar;
  return {-mass_term * psi.psi1 + d * psi.psi2, dbar * psi.psi1 - mass_term * psi.psi2};
}

SpinorPair dirac_residual(const PlaneWaveSpinorField& psi,
                          const std::optional<PotentialField>& potential, double charge) {
  CQ a;
  if (potential) {
    if (!potential->is_constant()) {
      throw Error(Errc::UnsupportedField,
                  "minimal coupling to a plane-wave potential leaves the plane-wave family");
    }
    a = potential->constant;
  }
  return dirac_operator(psi, psi.mass, a, charge);
}

PlaneWaveSpinorField make_solution(const MinkowskiVector& p, double mass,
                                   Species species, const CQ& phi) {
  if (!(mass > 0.0)) {
    throw Error(Errc::MasslessUnsupported, "the spinor condition divides by m");
  }
  if (!is_on_shell(p, mass)) {
    throw Error(Errc::OffShell, "momentum does not satisfy E² = p² + m²",
                (p.cq() * quat_conj(p.cq())).scalar_part().real() + mass * mass);
  }
  const PhaseSign sign = phase_sign(species);
  // ξ = ∓(1/m) @ conj(p) φ; the upper sign (particle) pairs with e^{-@⟨p,q⟩}.
  const double factor = species == Species::Particle ? -1.0 / mass : 1.0 / mass;
  const CQ xi = factor * (CQ::at() * quat_conj(p.cq()) * phi);
  return {phi, xi, p, sign, mass};
}

PlaneWaveSpinorField transform_spinor(const LorentzRotor& rotor,
                                      const PlaneWaveSpinorField& psi) {
  const CQ& w = rotor.omega();
  return {w * psi.psi1, complex_conj(w) * psi.psi2, apply_lorentz(rotor, psi.momentum),
          psi.sign, psi.mass};
}

}  // namespace cqdirac
