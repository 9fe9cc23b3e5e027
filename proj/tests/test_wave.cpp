#include <cmath>
#include <numbers>

#include "cqdirac/oracle/finite_difference.hpp"
#include "cqdirac/random.hpp"
#include "cqdirac/wave.hpp"
#include "helpers.hpp"

using namespace cqdirac;
using testing::error_code;
using testing::near;

namespace {

MinkowskiVector on_shell(double px, double py, double pz, double m) {
  return {std::sqrt(px * px + py * py + pz * pz + m * m), px, py, pz};
}

}  // namespace

TEST_SUITE("wave") {
  TEST_CASE("D on the coordinate function") {
    const Field dq = apply_D(LinearField::coordinate());
    const Field dbar_q = apply_Dbar(LinearField::coordinate());
    CHECK(std::get<CQ>(dbar_q) == -4.0 * CQ::one());
    CHECK(std::get<CQ>(dq) == 2.0 * CQ::one());
  }

  TEST_CASE("D on constants vanishes") {
    CHECK(std::get<CQ>(apply_D(Field{CQ(1, 2, 3, 4, 5, 6, 7, 8)})).is_zero());
    CHECK(std::get<CQ>(apply_Dbar(Field{CQ::k()})).is_zero());
  }

  TEST_CASE("D on a linear scalar function is its gradient") {
    const LinearScalarFunction alpha{MinkowskiVector(1, 2, 3, 4), 0.5};
    CHECK(apply_D(alpha) == MinkowskiVector(1, 2, 3, 4).cq());
    CHECK(near(std::get<CQ>(apply_D(Field{LinearField::from(alpha)})), apply_D(alpha)));
  }

  TEST_CASE("D on a plane wave matches central differences") {
    Rng rng(8);
    for (auto sign : {PhaseSign::Negative, PhaseSign::Positive}) {
      const PlaneWave w{rng.cq(), MinkowskiVector(0.9, -0.4, 0.3, 1.1), sign};
      const MinkowskiVector q(0.2, -1.0, 0.5, 0.7);
      const auto f = [&](const MinkowskiVector& x) { return w.evaluate(x); };
      CHECK(near(evaluate(apply_D(Field{w}), q), oracle::finite_difference_D(f, q, 1e-5), 1e-8));
      CHECK(near(evaluate(apply_Dbar(Field{w}), q), oracle::finite_difference_D(f, q, 1e-5, true),
                 1e-8));
    }
  }

  TEST_CASE("sampled fields are rejected") {
    const Field f = SampledField{[](const MinkowskiVector& q) { return q.t() * q.t() * CQ::one(); }};
    CHECK(evaluate(f, MinkowskiVector(2, 0, 0, 0)) == 4.0 * CQ::one());
    CHECK(error_code([&] { (void)apply_D(f); }) == Errc::UnsupportedField);
    CHECK(error_code([&] { (void)apply_Dbar(f); }) == Errc::UnsupportedField);
  }

  TEST_CASE("Klein-Gordon residual") {
    const double m = 1.5;
    CHECK(std::abs(klein_gordon_residual({1.0, MinkowskiVector(m, 0, 0, 0)}, m)) == 0.0);
    const double e = 2.0;
    CHECK(near(klein_gordon_residual({1.0, MinkowskiVector(e, 0, 0, 0)}, m), m * m - e * e));
    CHECK(std::abs(klein_gordon_residual({Complex(0.3, 1), on_shell(1, 2, -3, m)}, m)) < 1e-12);
    CHECK(is_on_shell(on_shell(1, 2, -3, m), m));
    CHECK_FALSE(is_on_shell(MinkowskiVector(2, 0, 0, 0), m));
  }

  TEST_CASE("rest-frame solutions") {
    const double m = 0.8;
    const CQ psi(1, 0, 2, -1, 0, 0, 0.5, 0);
    const PlaneWaveSpinorField particle{psi, psi, MinkowskiVector(m, 0, 0, 0),
                                        PhaseSign::Negative, m};
    const PlaneWaveSpinorField anti{psi, -psi, MinkowskiVector(m, 0, 0, 0),
                                    PhaseSign::Positive, m};
    CHECK(dirac_residual(particle).max_abs() == 0.0);
    CHECK(dirac_residual(anti).max_abs() == 0.0);
    PlaneWaveSpinorField wrong = particle;
    wrong.sign = PhaseSign::Positive;
    CHECK(dirac_residual(wrong).max_abs() > 0.1);
  }

  TEST_CASE("make_solution") {
    const double m = 1.0;
    const CQ phi = CQ::one() + 0.5 * CQ::j();
    const auto rest = make_solution(MinkowskiVector(m, 0, 0, 0), m, Species::Particle, phi);
    CHECK(near(rest.psi2, phi));
    const auto rest_anti =
        make_solution(MinkowskiVector(m, 0, 0, 0), m, Species::Antiparticle, phi);
    CHECK(near(rest_anti.psi2, -phi));
    CHECK(rest_anti.sign == PhaseSign::Positive);

    const auto moving = make_solution(on_shell(3, -2, 7, m), m, Species::Particle, phi);
    CHECK(dirac_residual(moving).max_abs() < 1e-12 * 10);

    CHECK(error_code([&] { (void)make_solution(MinkowskiVector(2, 0, 0, 0), m, Species::Particle, phi); }) ==
          Errc::OffShell);
    CHECK(error_code([&] { (void)make_solution(MinkowskiVector(1, 1, 0, 0), 0.0, Species::Particle, phi); }) ==
          Errc::MasslessUnsupported);
  }

  TEST_CASE("boosting a rest solution") {
    const double m = 1.2;
    const CQ phi(0.3, 1, 0, 0, -2, 0, 0, 0.4);
    const auto r = LorentzRotor::boost({0.6, 0, 0.8}, 0.9);
    const auto rest = make_solution(MinkowskiVector(m, 0, 0, 0), m, Species::Particle, phi);
    const auto moved = transform_spinor(r, rest);
    const auto direct = make_solution(moved.momentum, m, Species::Particle, r.omega() * phi);
    CHECK(near(moved.psi1, direct.psi1));
    CHECK(near(moved.psi2, direct.psi2));
  }

  TEST_CASE("a full turn flips the spinor") {
    const auto psi = make_solution(on_shell(0.5, 0.1, -0.2, 1.0), 1.0, Species::Particle, CQ::k());
    const auto turned =
        transform_spinor(LorentzRotor::rotation({0, 1, 0}, 2 * std::numbers::pi), psi);
    CHECK(near(turned.psi1, -psi.psi1));
    CHECK(near(turned.psi2, -psi.psi2));
    const auto same = transform_spinor(LorentzRotor{}, psi);
    CHECK(same.amplitudes() == psi.amplitudes());
  }

  TEST_CASE("constant potential coupling") {
    const double m = 1.0, e = 0.7;
    const CQ a = MinkowskiVector(0.2, 0.1, 0, -0.3).cq();
    const auto free = make_solution(on_shell(0.4, 0, 0.2, m), m, Species::Particle, CQ::one());
    // Minimal coupling: p -> p - e a (for s = -1) keeps the coupled residual zero.
    PlaneWaveSpinorField shifted = free;
    shifted.momentum = free.momentum + e * MinkowskiVector::from_cq(a);
    CHECK(dirac_residual(shifted, PotentialField::uniform(a), e).max_abs() < 1e-12);
    CHECK(error_code([&] {
            (void)dirac_residual(free, PotentialField::real_wave(MinkowskiVector(0, 1, 0, 0),
                                                                 MinkowskiVector(1, 0, 0, 1), 0),
                                 e);
          }) == Errc::UnsupportedField);
  }

  TEST_CASE("real potential waves are physical") {
    const auto a = PotentialField::real_wave(MinkowskiVector(0.1, 1, 0, 0),
                                             MinkowskiVector(1, 0, 0, 1), 0.3);
    const MinkowskiVector q(0.4, 0.2, -1, 0.6);
    const CQ v = a.evaluate(q);
    CHECK(near(complex_conj(v), -quat_conj(v)));
    CHECK(near(v, std::cos(scalar_product(MinkowskiVector(1, 0, 0, 1), q) + 0.3) *
                      MinkowskiVector(0.1, 1, 0, 0).cq()));
  }
}
