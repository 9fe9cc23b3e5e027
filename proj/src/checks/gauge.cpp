#include <numbers>
#include <vector>

#include "cqdirac/checks.hpp"
#include "cqdirac/error.hpp"
#include "cqdirac/lagrangian.hpp"
#include "cqdirac/spin.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

PlaneWaveSpinorField random_field(Rng& rng, double mass, PhaseSign sign) {
  return {rng.cq(), rng.cq(), detail::random_vector(rng), sign, mass};
}

PhaseSign random_sign(Rng& rng) {
  return rng.uniform() < 0.5 ? PhaseSign::Negative : PhaseSign::Positive;
}

QuaternionGauge random_quaternion_gauge(Rng& rng) {
  return {rng.direction(), rng.uniform(0, kTwoPi)};
}

PotentialField random_physical_potential(Rng& rng) {
  return PotentialField::real_wave(detail::random_vector(rng), detail::random_vector(rng),
                                   rng.uniform(0, kTwoPi)) +
         detail::random_vector(rng).cq();
}

}  // namespace

CheckReport gauge_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("gauge", default_tolerance("gauge"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;

  // Quaternionic gauge: L0, Dirac residual and spin eigenvalues unchanged.
  {
    double l0 = 0, residual = 0, spin = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng);
      const QuaternionGauge g = random_quaternion_gauge(rng);
      const PhaseSign sign = random_sign(rng);
      const std::vector<PlaneWaveSpinorField> waves{random_field(rng, m, sign),
                                                    random_field(rng, m, random_sign(rng))};
      const std::vector<PlaneWaveSpinorField> gauged{apply_quaternion_gauge(g, waves[0]),
                                                     apply_quaternion_gauge(g, waves[1])};
      const MinkowskiVector q = detail::random_vector(rng);
      l0 = std::max(l0, rel(l0_density(gauged, m, q), l0_density(waves, m, q)));

      const auto psi = make_solution(detail::random_on_shell(rng, m), m,
                                     sign == PhaseSign::Negative ? Species::Particle
                                                                 : Species::Antiparticle,
                                     rng.cq());
      const auto moved = apply_quaternion_gauge(g, psi);
      residual = std::max(residual, dirac_residual(moved).max_abs() / detail::dirac_scale(moved));

      const auto& b = spin_basis()[t % 4];
      const RestFrameState s =
          apply_quaternion_gauge(g, RestFrameState{b.amplitude * rng.complex(), Species::Particle, m});
      spin = std::max(spin, rel(SpinOperator::z()(s.amplitude), b.m_z * s.amplitude));
    }
    rec.residual("L0 invariant under e^{-n beta} (pointwise)", n, l0);
    rec.residual("e^{-n beta} keeps solutions solutions", n, residual);
    rec.residual("e^{-n beta} keeps S_z eigenvalues", n, spin);
  }

  // U(1) gauge with linear alpha.
  {
    double coupled = 0, lagrangian = 0, spin = 0, shift = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng), e = rng.normal();
      const U1Gauge g{e, LinearScalarFunction{detail::random_vector(rng), rng.normal()}};
      const double offset = std::get<LinearScalarFunction>(g.alpha).offset;

      const auto psi = random_field(rng, m, random_sign(rng));
      const auto a_const = PotentialField::uniform(detail::random_vector(rng).cq());
      const auto [psi_g, a_g] = apply_u1_gauge(g, psi, a_const);
      const SpinorPair before = dirac_residual(psi, a_const, e);
      const SpinorPair after = dirac_residual(psi_g, a_g, e);
      const Complex global = phase(-e * offset);
      coupled = std::max(coupled, rel(after, SpinorPair{before.upper * global, before.lower * global}) /
                                      detail::dirac_scale(psi));

      const std::vector<PlaneWaveSpinorField> waves{random_field(rng, m, random_sign(rng)),
                                                    random_field(rng, m, random_sign(rng))};
      const PotentialField a = random_physical_potential(rng);
      std::vector<PlaneWaveSpinorField> gauged;
      PotentialField a_shifted = a;
      for (const auto& w : waves) {
        auto [wg, ag] = apply_u1_gauge(g, w, a);
        gauged.push_back(wg);
        a_shifted = ag;
      }
      const MinkowskiVector q = detail::random_vector(rng);
      lagrangian = std::max(lagrangian, rel(lqed_density(gauged, a_shifted, m, e, q),
                                            lqed_density(waves, a, m, e, q)));

      const auto& b = spin_basis()[t % 4];
      const auto rest = RestFrameState{b.amplitude, Species::Particle, m}.field();
      const auto rest_g = apply_u1_gauge(g, rest, a_const).psi;
      spin = std::max(spin, rel(SpinOperator::z()(rest_g.psi1), b.m_z * rest_g.psi1));

      // Constant alpha: global phase, potential untouched.
      const U1Gauge constant{e, LinearScalarFunction{MinkowskiVector{}, rng.normal()}};
      const auto [psi_c, a_c] = apply_u1_gauge(constant, psi, a_const);
      const Complex c = phase(-e * std::get<LinearScalarFunction>(constant.alpha).offset);
      shift = std::max({shift, rel(psi_c.amplitudes(), SpinorPair{psi.psi1 * c, psi.psi2 * c}),
                        rel(a_c.constant, a_const.constant),
                        rel(psi_c.momentum.cq(), psi.momentum.cq())});
    }
    rec.residual("coupled Dirac residual gauge covariant", n, coupled);
    rec.residual("L0 + L_int + L_A invariant under U(1)", n, lagrangian);
    rec.residual("U(1) keeps S_z eigenvalues", n, spin);
    rec.residual("constant alpha: global phase only", n, shift);

    bool rejected = false;
    try {
      const U1Gauge sampled{1.0, [](const MinkowskiVector& q) { return q.t() * q.t(); }};
      (void)apply_u1_gauge(sampled, random_field(rng, 1.0, PhaseSign::Negative),
                           PotentialField::uniform(CQ{}));
    } catch (const Error& err) {
      rejected = err.code() == Errc::UnsupportedField;
    }
    rec.all("non-linear alpha is rejected", 1, rejected);
  }

  // Normal decomposition.
  {
    double round = 0, unit = 0;
    std::size_t refused = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const Complex c = phase(rng.uniform(0, kTwoPi));
      const CQ q = rng.unit_quaternion();
      const CQ sigma = q * c;
      const NormalDecomposition d = decompose_normal(sigma);
      round = std::max({round, rel(d.q * d.c, sigma), std::abs(std::abs(d.c) - 1)});
      const auto qc = d.q.coefficients();
      double imag = 0, len = 0;
      for (const Complex& v : qc) {
        imag = std::max(imag, std::abs(v.imag()));
        len += v.real() * v.real();
      }
      unit = std::max({unit, imag, std::abs(std::sqrt(len) - 1)});
      try {
        (void)decompose_normal(rng.cq());
      } catch (const Error& e) {
        if (e.code() == Errc::NotNormal) ++refused;
      }
    }
    rec.residual("decompose_normal: c q = Sigma", n, round);
    rec.residual("decompose_normal: q real unit quaternion", n, unit);
    rec.all("decompose_normal rejects non-normal Sigma", n, refused);

    const auto at = decompose_normal(CQ::at());
    const auto i = decompose_normal(CQ::i());
    rec.residual("Sigma = @ -> (@, 1); Sigma = i -> (1, i)", 1,
                 std::max({rel(at.c, Complex(0, 1)), rel(at.q, CQ::one()), rel(i.c, Complex(1, 0)),
                           rel(i.q, CQ::i())}),
                 1e-15);
  }

  // is_symmetry agrees with L0 invariance.
  {
    std::size_t agreed = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const CQ sigma = t % 2 == 0 ? rng.unit_quaternion() * phase(rng.uniform(0, kTwoPi))
                                  : rng.cq();
      const double m = detail::random_mass(rng);
      const auto psi = random_field(rng, m, random_sign(rng));
      const PlaneWaveSpinorField moved{psi.psi1 * sigma, psi.psi2 * sigma, psi.momentum,
                                       psi.sign, m};
      const MinkowskiVector q = detail::random_vector(rng);
      const bool invariant = rel(l0_density(moved, m, q), l0_density(psi, m, q)) < 1e-9;
      if (invariant == is_symmetry(sigma)) ++agreed;
    }
    rec.all("is_symmetry(Sigma) iff L0 invariant", n, agreed);
  }

  // Local gauge obstruction.
  {
    const ObstructionReport report = local_gauge_obstruction_demo(options.seed, n);
    rec.residual("obstruction: identical states match", 1, report.rows[0].mismatch);
    rec.residual("obstruction: complex rescaling matches", 1, report.rows[1].mismatch);
    rec.floor("obstruction: generic pairs mismatch (fraction)", n,
              report.generic_positive_fraction, 0.99);
  }

  // Examples.
  {
    const RestFrameState s =
        apply_quaternion_gauge({{1, 0, 0}, std::numbers::pi / 2},
                               RestFrameState{spin_basis()[0].amplitude, Species::Particle, 1});
    rec.residual("(1+@k)(-i) = -(i+@j)", 1, rel(s.amplitude, -spin_basis()[1].amplitude), 1e-15);
    rec.residual("(1+@k)(-i) lies in subspace 2", 1, subspace_residual(s.amplitude, 2), 1e-15);
    const CQ psi = rng.cq();
    rec.residual("beta = 0 is the identity", 1,
                 rel(apply_quaternion_gauge({{0, 1, 0}, 0.0},
                                            RestFrameState{psi, Species::Particle, 1})
                         .amplitude,
                     psi),
                 1e-15);
  }

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
