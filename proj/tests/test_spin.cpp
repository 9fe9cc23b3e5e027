#include <cmath>
#include <numbers>

#include "cqdirac/random.hpp"
#include "cqdirac/spin.hpp"
#include "helpers.hpp"

using namespace cqdirac;
using testing::error_code;
using testing::near;

namespace {

const CQ kUpK(1, 0, 0, 0, 0, 0, 0, 1);     // 1+@k
const CQ kIatJ(0, 0, 1, 0, 0, 1, 0, 0);    // i+@j
const CQ kAtIJ(0, 0, 0, 1, 1, 0, 0, 0);    // @i+j
const CQ kMinus(0, -1, 0, 0, 0, 0, -1, 0); // -@-k

}  // namespace

TEST_SUITE("spin") {
  TEST_CASE("S_z eigenstates") {
    const SpinOperator sz = SpinOperator::z();
    CHECK(sz(kUpK) == 0.5 * kUpK);
    CHECK(sz(kAtIJ) == -0.5 * kAtIJ);
    CHECK(sz(kIatJ) == 0.5 * kIatJ);
    CHECK(sz(kMinus) == -0.5 * kMinus);
    for (const auto& b : spin_basis()) CHECK(sz(b.amplitude) == b.m_z * b.amplitude);
  }

  TEST_CASE("total spin and commutators on random states") {
    Rng rng(9);
    const SpinOperator sx = SpinOperator::x(), sy = SpinOperator::y(), sz = SpinOperator::z();
    for (int n = 0; n < 20; ++n) {
      const CQ psi = rng.cq();
      CHECK(near(sx(sx(psi)) + sy(sy(psi)) + sz(sz(psi)), 0.75 * psi));
      CHECK(near(sx(sy(psi)) - sy(sx(psi)), CQ::at() * sz(psi)));
      CHECK(near(sy(sz(psi)) - sz(sy(psi)), CQ::at() * sx(psi)));
      CHECK(near(sz(sx(psi)) - sx(sz(psi)), CQ::at() * sy(psi)));
    }
    CHECK(error_code([] { (void)SpinOperator({0.5, 0, 0}); }) == Errc::BadDirection);
  }

  TEST_CASE("ladder operators") {
    const CQ up = ladder_multiplier(LadderSign::Raise);
    const CQ down = ladder_multiplier(LadderSign::Lower);
    CHECK((up * kUpK).is_zero());
    const CQ raised = up * kAtIJ;
    CHECK_FALSE(raised.is_zero());
    CHECK(subspace_residual(raised, 1) < 1e-15);
    CHECK(near(SpinOperator::z()(raised), 0.5 * raised));
    Rng rng(10);
    const CQ psi = rng.cq();
    const CQ sz_psi = SpinOperator::z()(psi);
    CHECK(near(down * (up * psi) + SpinOperator::z()(sz_psi) + sz_psi, 0.75 * psi));
    const RestFrameState s{kAtIJ, Species::Particle, 1.0};
    CHECK(ladder(LadderSign::Raise, s).amplitude == raised);
  }

  TEST_CASE("right multiplication moves between the basis states") {
    CHECK(kUpK * CQ::i() == kIatJ);
    CHECK(kAtIJ * CQ::i() == kMinus);
    for (const auto& b : spin_basis()) {
      for (const CQ& u : {CQ::j(), CQ::k()}) {
        const CQ moved = b.amplitude * u;
        const CQ back = recompose(decompose_psi0(moved));
        CHECK(near(back, moved));
        CHECK(near(SpinOperator::z()(moved), b.m_z * moved));
      }
    }
  }

  TEST_CASE("subspaces") {
    CHECK(subspace_residual(kUpK, 1) == 0.0);
    CHECK(subspace_residual(kAtIJ, 1) == 0.0);
    CHECK(subspace_residual(kIatJ, 2) == 0.0);
    CHECK(subspace_residual(kUpK, 2) == doctest::Approx(1.0));
    CHECK(subspace_residual(CQ::one(), 1) == doctest::Approx(std::sqrt(0.5)));
  }

  TEST_CASE("spin direction") {
    const auto up = has_spin_direction(kUpK);
    REQUIRE(up);
    CHECK(up->direction[2] == doctest::Approx(1.0));
    CHECK(up->m_z == 0.5);
    const auto down = has_spin_direction(kAtIJ);
    REQUIRE(down);
    CHECK(down->direction[2] == doctest::Approx(1.0));
    CHECK(down->m_z == -0.5);
    CHECK_FALSE(has_spin_direction(CQ::one()));
    CHECK(error_code([] { (void)has_spin_direction(CQ{}); }) == Errc::ZeroState);
  }

  TEST_CASE("spin direction of a + @d m'") {
    Rng rng(11);
    for (int n = 0; n < 20; ++n) {
      const Direction m = rng.direction();
      const double a = rng.normal();
      const double d = n % 2 ? a : -a;
      const CQ psi = a * CQ::one() + d * (CQ::at() * direction_quaternion(m));
      const auto dir = has_spin_direction(psi);
      REQUIRE(dir);
      const double dot = dir->direction[0] * m[0] + dir->direction[1] * m[1] + dir->direction[2] * m[2];
      CHECK(std::abs(dot) == doctest::Approx(1.0));
      CHECK(near(SpinOperator(dir->direction)(psi), dir->m_z * psi, 1e-10));
    }
  }

  TEST_CASE("decomposition of psi0") {
    const auto c = decompose_psi0(CQ::one());
    CHECK(near(c[0], 0.5));
    CHECK(near(c[1], 0.0));
    CHECK(near(c[2], 0.0));
    CHECK(near(c[3], Complex(0, 0.5)));
    const auto e = decompose_psi0(kUpK);
    CHECK(near(e[0], 1.0));
    CHECK(std::abs(e[1]) + std::abs(e[2]) + std::abs(e[3]) == 0.0);
    Rng rng(12);
    const CQ psi = rng.cq();
    CHECK(near(recompose(decompose_psi0(psi)), psi));
  }

  TEST_CASE("quaternionic gauge") {
    const RestFrameState s{kUpK, Species::Particle, 1.0};
    const auto g = apply_quaternion_gauge({{1, 0, 0}, std::numbers::pi / 2}, s);
    CHECK(near(g.amplitude, -kIatJ));
    CHECK(subspace_residual(g.amplitude, 2) < 1e-15);
    CHECK(apply_quaternion_gauge({{0, 0, 1}, 0.0}, s).amplitude == kUpK);
    Rng rng(13);
    const QuaternionGauge random{rng.direction(), rng.uniform(0, 6)};
    const CQ moved = apply_quaternion_gauge(random, RestFrameState{kAtIJ}).amplitude;
    CHECK(near(SpinOperator::z()(moved), -0.5 * moved));
    CHECK(no_escape_floor(CQ::one(), 1) > 1e-3);
  }

  TEST_CASE("U(1) gauge") {
    const double m = 1.0, e = 0.5;
    const PlaneWaveSpinorField psi{CQ::one(), CQ::one(), MinkowskiVector(m, 0, 0, 0),
                                   PhaseSign::Negative, m};
    const auto a = PotentialField::uniform(MinkowskiVector(0.1, 0.2, 0, 0).cq());
    const auto none = apply_u1_gauge({e, LinearScalarFunction{}}, psi, a);
    CHECK(none.psi.amplitudes() == psi.amplitudes());
    CHECK(none.potential.constant == a.constant);

    const auto constant = apply_u1_gauge({e, LinearScalarFunction{{}, 2.0}}, psi, a);
    CHECK(near(constant.psi.psi1, CQ::one() * phase(-e * 2.0)));
    CHECK(constant.potential.constant == a.constant);

    const LinearScalarFunction alpha{MinkowskiVector(0.3, -0.1, 0.2, 0.4), 0.7};
    const auto moved = apply_u1_gauge({e, alpha}, psi, a);
    CHECK(moved.potential.constant == a.constant + alpha.gradient.cq());
    const SpinorPair before = dirac_residual(psi, a, e);
    const SpinorPair after = dirac_residual(moved.psi, moved.potential, e);
    const Complex global = phase(-e * alpha.offset);
    CHECK(near(after.upper, before.upper * global));
    CHECK(near(after.lower, before.lower * global));

    const U1Gauge sampled{e, [](const MinkowskiVector& q) { return q.x() * q.x(); }};
    CHECK(error_code([&] { (void)apply_u1_gauge(sampled, psi, a); }) == Errc::UnsupportedField);
  }

  TEST_CASE("normal decomposition") {
    const auto at = decompose_normal(CQ::at());
    CHECK(near(at.c, Complex(0, 1)));
    CHECK(near(at.q, CQ::one()));
    const auto i = decompose_normal(CQ::i());
    CHECK(near(i.c, 1.0));
    CHECK(near(i.q, CQ::i()));
    Rng rng(14);
    for (int n = 0; n < 20; ++n) {
      const double theta = rng.uniform(0, 6), beta = rng.uniform(0, 6);
      const CQ q = std::cos(beta) * CQ::one() + std::sin(beta) * direction_quaternion(rng.direction());
      const CQ sigma = q * phase(theta);
      const auto d = decompose_normal(sigma);
      CHECK(near(d.q * d.c, sigma));
      CHECK(std::abs(d.c) == doctest::Approx(1.0));
    }
    CHECK(error_code([] { (void)decompose_normal(2.0 * CQ::one()); }) == Errc::NotNormal);
    CHECK(error_code([] { (void)decompose_normal(CQ::one() + CQ::at() * CQ::k()); }) ==
          Errc::NotNormal);
  }

  TEST_CASE("local gauge obstruction") {
    const Direction n{0, 0, 1};
    Rng rng(15);
    const CQ a = rng.cq(), b = rng.cq();
    CHECK(obstruction_mismatch(a, a, n) == 0.0);
    CHECK(obstruction_mismatch(a, a * Complex(0.3, -2), n) < 1e-12);
    CHECK(obstruction_mismatch(a, b, n) > 1e-3);
    const CQ x = compensating_field(a, n);
    CHECK(near(x * a, CQ::i() * a * CQ::k(), 1e-10));
    const auto report = local_gauge_obstruction_demo(3, 32);
    CHECK(report.rows.size() == 34);
    CHECK(report.generic_positive_fraction >= 0.99);
  }
}
