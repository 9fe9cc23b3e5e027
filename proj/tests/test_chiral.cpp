#include <cmath>

#include "cqdirac/chiral.hpp"
#include "cqdirac/random.hpp"
#include "cqdirac/spin.hpp"
#include "helpers.hpp"

using namespace cqdirac;
using namespace cqdirac::chiral;
using testing::error_code;
using testing::near;

namespace {

const CQ kUpK(1, 0, 0, 0, 0, 0, 0, 1);
const CQ kAtIJ(0, 0, 0, 1, 1, 0, 0, 0);

bool same(const ChiralSpinor& a, const ChiralSpinor& b, double tol = 1e-12) {
  for (std::size_t n = 0; n < 4; ++n) {
    if (!near(a[n], b[n], tol)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("chiral") {
  TEST_CASE("gamma matrices") {
    const auto& g = GammaSet::chiral().gamma;
    CHECK((g[0] * g[0] - Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g[1] * g[1] + Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g[0] * g[1] + g[1] * g[0]).cwiseAbs().maxCoeff() == 0.0);
    const auto report = gamma_algebra_check();
    CHECK(report.entries.size() == 10);
    CHECK(report.max_deviation == 0.0);
    CHECK(metric(0, 0) == 1.0);
    CHECK(metric(2, 2) == -1.0);
    CHECK(metric(1, 3) == 0.0);
  }

  TEST_CASE("mapping examples") {
    CHECK(same(cq_to_chiral({kUpK, kUpK}), {1.0, 0.0, 1.0, 0.0}));
    CHECK(same(cq_to_chiral({kAtIJ, CQ{}}), {0.0, 1.0, 0.0, 0.0}));
    const SpinorPair back = chiral_to_cq({1.0, 0.0, 1.0, 0.0});
    CHECK(back.upper == kUpK);
    CHECK(back.lower == kUpK);
    CHECK(error_code([] { (void)cq_to_chiral({CQ::one(), CQ{}}); }) == Errc::NotInSubspace);
  }

  TEST_CASE("mapping is linear and invertible on the subspace") {
    Rng rng(20);
    const ChiralSpinor a{rng.complex(), rng.complex(), rng.complex(), rng.complex()};
    const ChiralSpinor b{rng.complex(), rng.complex(), rng.complex(), rng.complex()};
    CHECK(same(cq_to_chiral(chiral_to_cq(a)), a));
    const SpinorPair sa = chiral_to_cq(a), sb = chiral_to_cq(b);
    const ChiralSpinor sum = cq_to_chiral({sa.upper + sb.upper, sa.lower + sb.lower});
    CHECK(same(sum, {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}));
  }

  TEST_CASE("left multiplication acts as Pauli matrices") {
    const Complex I{0, 1};
    const ChiralSpinor c{Complex(0.3, 1), Complex(-2, 0.5), 0.0, 0.0};
    const SpinorPair psi = chiral_to_cq(c);
    const ChiralSpinor by_k = cq_to_chiral({CQ::k() * psi.upper, CQ{}});
    CHECK(same(by_k, {-I * c[0], I * c[1], 0.0, 0.0}));
    const ChiralSpinor by_i = cq_to_chiral({CQ::i() * psi.upper, CQ{}});
    CHECK(same(by_i, {-I * c[1], -I * c[0], 0.0, 0.0}));
  }

  TEST_CASE("residuals") {
    const double m = 1.0;
    const auto rest = RestFrameState{kUpK}.field();
    const auto c = cq_to_chiral(rest.amplitudes());
    CHECK(max_abs(chiral_dirac_residual(c, four_momentum(rest.momentum), m, -1)) < 1e-15);

    const MinkowskiVector p(std::sqrt(1 + 4 + 1 + 0.25), 2, -1, 0.5);
    const auto psi = make_solution(p, m, Species::Particle, kUpK * Complex(0.5, 1) + kAtIJ);
    CHECK(max_abs(chiral_dirac_residual(cq_to_chiral(psi.amplitudes()), four_momentum(p), m, -1)) <
          1e-12);

    const ChiralSpinor off{1.0, 0.0, 0.0, 0.0};
    CHECK(max_abs(chiral_dirac_residual(off, four_momentum(p), m, -1)) > 0.1);

    const auto sol = chiral_solution(four_momentum(p), m, 1, 0.4, Complex(0, -1));
    CHECK(max_abs(chiral_dirac_residual(sol, four_momentum(p), m, 1)) < 1e-12);
    CHECK(dirac_residual(to_field(sol, p, m, PhaseSign::Positive)).max_abs() < 1e-12);
  }
}
