#include <numbers>
#include <vector>

#include "cqdirac/checks.hpp"
#include "cqdirac/error.hpp"
#include "cqdirac/lagrangian.hpp"
#include "cqdirac/oracle/finite_difference.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kActionPoints = 16;
constexpr int kActionFields = 8;

PhaseSign random_sign(Rng& rng) {
  return rng.uniform() < 0.5 ? PhaseSign::Negative : PhaseSign::Positive;
}

PlaneWaveSpinorField random_field(Rng& rng, double mass) {
  return {rng.cq(), rng.cq(), detail::random_vector(rng), random_sign(rng), mass};
}

PotentialField random_physical_potential(Rng& rng) {
  return PotentialField::real_wave(detail::random_vector(rng), detail::random_vector(rng),
                                   rng.uniform(0, kTwoPi)) +
         detail::random_vector(rng).cq();
}

// Integer wave numbers in [-3, 3] close over a 2π box.
PlaneWaveSpinorField random_commensurate_field(Rng& rng, double mass) {
  const auto k = [&] { return std::floor(rng.uniform(-3, 4)); };
  const double t = k(), x = k(), y = k(), z = k();
  return {rng.cq(), rng.cq(), MinkowskiVector(t, x, y, z), random_sign(rng), mass};
}

// Gauge shift Dα for α = ε cos⟨k,q⟩, as plane waves.
PotentialField gradient_of_cosine(double eps, const MinkowskiVector& k) {
  const CQ half = (0.5 * eps) * (CQ::at() * k.cq());
  return {CQ{}, {PlaneWave{half, k, PhaseSign::Positive}, PlaneWave{-half, k, PhaseSign::Negative}}};
}

PotentialField operator+(PotentialField a, const PotentialField& b) {
  a.constant += b.constant;
  a.waves.insert(a.waves.end(), b.waves.begin(), b.waves.end());
  return a;
}

}  // namespace

CheckReport lagrangian_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("lagrangian", default_tolerance("lagrangian"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;

  // Reality of the interaction and field terms.
  {
    double l_int = 0, l_a = 0, scalar_f = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng), e = rng.normal();
      const std::vector<PlaneWaveSpinorField> waves{random_field(rng, m), random_field(rng, m)};
      const PotentialField a = random_physical_potential(rng);
      const MinkowskiVector q = detail::random_vector(rng);
      const Complex li = l_int_density(waves, a, e, q);
      l_int = std::max(l_int, std::abs(li.imag()) / std::max(1.0, std::abs(li)));
      const Complex la = la_density_complex(a, q);
      l_a = std::max(l_a, std::abs(la.imag()) / std::max(1.0, std::abs(la)));
      scalar_f = std::max(scalar_f, std::abs(field_strength(a, q).F.scalar_part()));
    }
    rec.residual("Im L_int = 0 for physical A", n, l_int);
    rec.residual("Im L_A = 0", n, l_a);
    rec.residual("scalar(F) = 0", n, scalar_f);
  }

  // Field strength.
  {
    double constant = 0, oracle = 0, gauge = 0, scaling = 0;
    const double h = 1e-5;
    for (std::size_t t = 0; t < n; ++t) {
      const MinkowskiVector q = detail::random_vector(rng);
      constant = std::max(constant,
                          field_strength(PotentialField::uniform(rng.cq()), q).F.max_abs());
      const PotentialField a = random_physical_potential(rng);
      const CQ f = field_strength(a, q).F;
      const auto sample = [&](const MinkowskiVector& x) { return a.evaluate(x); };
      const CQ fd = oracle::finite_difference_D(sample, q, h, true).vector_part();
      oracle = std::max(oracle, rel(f, fd));

      const PotentialField shifted =
          a + gradient_of_cosine(rng.normal(), detail::random_vector(rng));
      gauge = std::max(gauge, rel(field_strength(shifted, q).F, f));

      const double lambda = rng.uniform(-3, 3);
      scaling = std::max(scaling, rel(la_density(lambda * a, q), lambda * lambda * la_density(a, q)));
    }
    rec.residual("F = 0 for constant A", n, constant);
    rec.residual("F = central differences of conj(D)A (h=1e-5)", n, oracle, 1e-8);
    rec.residual("F unchanged by A -> A + D alpha", n, gauge);
    rec.residual("L_A(lambda A) = lambda^2 L_A(A)", n, scaling);
  }

  // Free density: on-shell zero, Lorentz scalar, hand expansion.
  {
    double on_shell = 0, lorentz = 0, hand = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng);
      const Species species = rng.uniform() < 0.5 ? Species::Particle : Species::Antiparticle;
      const auto psi = make_solution(detail::random_on_shell(rng, m), m, species, rng.cq());
      const MinkowskiVector q = detail::random_vector(rng);
      on_shell = std::max(on_shell, std::abs(l0_density(psi, m, q)) /
                                        (detail::dirac_scale(psi) *
                                         std::max(psi.psi1.max_abs(), psi.psi2.max_abs())));

      const auto field = random_field(rng, m);
      const LorentzRotor r = detail::random_rotor(rng);
      const auto moved = transform_spinor(r, field);
      lorentz = std::max(lorentz, rel(l0_density(moved, m, apply_lorentz(r, q)),
                                      l0_density(field, m, q)));

      const PlaneWaveSpinorField upper{field.psi1, CQ{}, field.momentum, field.sign, m};
      const CQ adj = complex_conj(quat_conj(field.psi1));
      const Complex expect =
          trace(adj * (to_double(field.sign) * (CQ::at() * quat_conj(field.momentum.cq()))) *
                field.psi1);
      hand = std::max(hand, rel(l0_density(upper, m, q), expect));
    }
    rec.residual("L0 = 0 on constructed solutions", n, on_shell);
    rec.residual("L0'(q') = L0(q) under random rotors", n, lorentz);
    rec.residual("psi2 = 0: L0 = tr(psi1-adjoint s@conj(p) psi1)", n, hand);
  }

  // Discrete free action on a periodic box.
  {
    const Box box{kTwoPi, kTwoPi, kTwoPi, kTwoPi};
    double imag = 0, doubling = 0, single = 0;
    for (int t = 0; t < kActionFields; ++t) {
      const double m = detail::random_mass(rng);
      const std::vector<PlaneWaveSpinorField> waves{random_commensurate_field(rng, m),
                                                    random_commensurate_field(rng, m)};
      const Complex s = discrete_action(waves, m, box, kActionPoints);
      imag = std::max(imag, std::max(0.0, std::abs(s.imag()) - 1e-12) /
                                std::max(1e-300, std::abs(s.real())));
      if (t == 0) {
        const Complex fine = discrete_action(waves, m, box, 2 * kActionPoints);
        doubling = rel(fine, s);
      }
    }
    const double m = 1.0;
    const MinkowskiVector p(std::sqrt(2.0), 1, 0, 0);
    const auto solution = make_solution(p, m, Species::Particle, CQ::one());
    const Box stretched{kTwoPi / p.energy(), kTwoPi, kTwoPi, kTwoPi};
    single = std::abs(discrete_action(SpinorWaves(&solution, 1), m, stretched, 4));
    rec.residual("Im S0 / |Re S0| on commensurate boxes (n=16)", kActionFields, imag, 1e-10);
    rec.residual("S0 unchanged from n=16 to n=32", 1, doubling);
    rec.residual("S0 = 0 for one on-shell solution", 1, single);

    bool rejected = false;
    try {
      const PlaneWaveSpinorField odd{CQ::one(), CQ{}, MinkowskiVector(0.5, 0, 0, 0),
                                     PhaseSign::Negative, 1.0};
      (void)discrete_action(SpinorWaves(&odd, 1), 1.0, box, 4);
    } catch (const Error& e) {
      rejected = e.code() == Errc::IncommensurateMomenta;
    }
    rec.all("incommensurate momenta are rejected", 1, rejected);
  }

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
