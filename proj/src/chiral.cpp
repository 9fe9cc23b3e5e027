#include "cqdirac/chiral.hpp"

#include <algorithm>

#include "cqdirac/error.hpp"

namespace cqdirac::chiral {

namespace {

const CQ kUp(1, 0, 0, 0, 0, 0, 0, 1);    // 1+@k
const CQ kDown(0, 0, 0, 1, 1, 0, 0, 0);  // @i+j

struct Split {
  Complex up, down;
  double residual;
};

// Orthogonal projection onto span{kUp, kDown}; both have |b|² = 2.
Split split(const CQ& psi) {
  const auto q = psi.coefficients();
  const Complex I{0, 1};
  const Complex up = 0.5 * (q[0] - I * q[3]);
  const Complex down = 0.5 * (q[2] - I * q[1]);
  return {up, down, (psi - kUp * up - kDown * down).max_abs()};
}

}  // namespace

ChiralSpinor cq_to_chiral(const SpinorPair& psi, double tol) {
  const Split a = split(psi.upper);
  const Split b = split(psi.lower);
  const double scale = std::max(1.0, psi.max_abs());
  const double residual = std::max(a.residual, b.residual) / scale;
  if (residual > tol) {
    throw Error(Errc::NotInSubspace, "spinor has components outside span{(1+@k), (@i+j)}",
                residual);
  }
  return {a.up, a.down, b.up, b.down};
}

SpinorPair chiral_to_cq(const ChiralSpinor& c) {
  return {kUp * c[0] + kDown * c[1], kUp * c[2] + kDown * c[3]};
}

FourMomentum four_momentum(const MinkowskiVector& p) { return {p.t(), p.x(), p.y(), p.z()}; }

PlaneWaveSpinorField to_field(const ChiralSpinor& c, const MinkowskiVector& p, double mass,
                              PhaseSign sign) {
  const SpinorPair amps = chiral_to_cq(c);
  return {amps.upper, amps.lower, p, sign, mass};
}

}  // namespace cqdirac::chiral
