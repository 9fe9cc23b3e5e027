#include <cmath>
#include <numbers>

#include "cqdirac/checks.hpp"
#include "cqdirac/error.hpp"
#include "cqdirac/oracle/spin_proof.hpp"
#include "cqdirac/spin.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

namespace {

constexpr int kSphere = 10000;

std::vector<Direction> fibonacci_sphere(int count) {
  std::vector<Direction> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int n = 0; n < count; ++n) {
    const double z = 1.0 - (2.0 * n + 1.0) / count;
    const double r = std::sqrt(1.0 - z * z);
    out.push_back({r * std::cos(golden * n), r * std::sin(golden * n), z});
  }
  return out;
}

// min over the grid and both signs of |(@/2) n ψ ∓ ½ψ| / |ψ|.
double best_eigen_residual(const CQ& psi, const std::vector<Direction>& grid) {
  const CQ ip = CQ::i() * psi, jp = CQ::j() * psi, kp = CQ::k() * psi;
  const CQ half_at = 0.5 * (CQ::at() * CQ::one());
  const CQ image[3] = {half_at * ip, half_at * jp, half_at * kp};
  const CQ target = 0.5 * psi;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& n : grid) {
    const CQ s = n[0] * image[0] + n[1] * image[1] + n[2] * image[2];
    best = std::min({best, (s - target).norm(), (s + target).norm()});
  }
  return best / psi.norm();
}

CQ random_null(Rng& rng) {
  const Complex u1 = rng.complex(), u2 = rng.complex(), v1 = rng.complex(), v2 = rng.complex();
  return from_matrix({u1 * v1, u1 * v2, u2 * v1, u2 * v2});
}

CQ random_imaginary_unit(Rng& rng) { return direction_quaternion(rng.direction()); }

double direction_gap(const Direction& a, const CQ& b) {
  const double plus = std::abs(a[0] - b.x()) + std::abs(a[1] - b.y()) +
                      std::abs(a[2] - b.z());
  const double minus = std::abs(a[0] + b.x()) + std::abs(a[1] + b.y()) +
                       std::abs(a[2] + b.z());
  return std::min(plus, minus);
}

}  // namespace

CheckReport spin_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("spin", default_tolerance("spin"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;
  const SpinOperator sx = SpinOperator::x(), sy = SpinOperator::y(), sz = SpinOperator::z();
  const CQ at = CQ::at();

  // Operator algebra.
  {
    const CQ& x = sx.multiplier();
    const CQ& y = sy.multiplier();
    const CQ& z = sz.multiplier();
    rec.residual("S^2 = 3/4", 1, rel(x * x + y * y + z * z, 0.75 * CQ::one()), 1e-12);
    rec.residual("[S_x,S_y] = @S_z (cyclic)", 1,
                 std::max({rel(x * y - y * x, at * z), rel(y * z - z * y, at * x),
                           rel(z * x - x * z, at * y)}),
                 1e-12);
    const CQ up = ladder_multiplier(LadderSign::Raise), down = ladder_multiplier(LadderSign::Lower);
    rec.residual("S^2 = S_z^2 + (S+S- + S-S+)/2", 1,
                 rel(x * x + y * y + z * z, z * z + 0.5 * (up * down + down * up)), 1e-12);
  }

  // Basis: eigenvalues, closure, right multiplication, ladders.
  {
    double eigen = 0, closure = 0, right = 0, ladder_ok = 0, ladder_zero = 0;
    for (const auto& b : spin_basis()) {
      eigen = std::max(eigen, rel(sz(b.amplitude), b.m_z * b.amplitude));
      for (const SpinOperator* op : {&sx, &sy, &sz}) {
        closure = std::max(closure, subspace_residual((*op)(b.amplitude), b.subspace));
      }
      for (const CQ& u : {CQ::i(), CQ::j(), CQ::k()}) {
        const CQ moved = b.amplitude * u;
        right = std::max(right, rel(sz(moved), b.m_z * moved));
      }
      const bool raised = b.m_z > 0;
      const CQ kill = ladder_multiplier(raised ? LadderSign::Raise : LadderSign::Lower) * b.amplitude;
      const CQ flip = ladder_multiplier(raised ? LadderSign::Lower : LadderSign::Raise) * b.amplitude;
      ladder_zero = std::max(ladder_zero, kill.max_abs());
      ladder_ok = std::max({ladder_ok, rel(sz(flip), -b.m_z * flip),
                            subspace_residual(flip, b.subspace),
                            flip.norm() > 0.5 ? 0.0 : 1.0});
    }
    rec.residual("S_z eigenvalues of the basis", 4, eigen, 1e-12);
    rec.residual("subspaces closed under S_x, S_y, S_z", 12, closure, 1e-12);
    rec.residual("right multiplication by i, j, k keeps m_z", 12, right, 1e-12);
    rec.residual("S+ on +1/2 and S- on -1/2 vanish", 4, ladder_zero, 1e-12);
    rec.residual("ladders flip m_z within the subspace", 4, ladder_ok, 1e-12);
  }

  // Decomposition.
  {
    const auto c = decompose_psi0(CQ::one());
    const double d = std::max({std::abs(c[0] - 0.5), std::abs(c[1]), std::abs(c[2]),
                               std::abs(c[3] - Complex(0, 0.5))});
    rec.residual("decompose(1) = (1/2, 0, 0, @/2)", 1, d, 1e-12);
    double round = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const CQ psi = rng.cq();
      round = std::max(round, rel(recompose(decompose_psi0(psi)), psi));
    }
    rec.residual("recompose(decompose(psi)) = psi", n, round);
  }

  // Spin direction exists iff psi is null.
  {
    const auto grid = fibonacci_sphere(kSphere);
    double eigen = 0;
    std::size_t found = 0, refused = 0;
    double non_null_floor = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const CQ psi = random_null(rng);
      if (const auto dir = has_spin_direction(psi)) {
        ++found;
        const CQ lhs = SpinOperator(dir->direction)(psi);
        eigen = std::max(eigen, distance(lhs, dir->m_z * psi) / psi.max_abs());
      }
      const CQ generic = rng.cq();
      if (!has_spin_direction(generic)) ++refused;
      non_null_floor = std::min(non_null_floor, best_eigen_residual(generic, grid));
    }
    rec.all("null psi has a spin direction", n, found);
    rec.residual("(@/2) n psi = m_z psi for the returned n", n, eigen);
    rec.all("non-null psi has no spin direction", n, refused);
    rec.floor("non-null psi: no eigen-direction on a 10^4 sphere grid", n, non_null_floor, 1e-6);
  }

  // Independent constructive oracle.
  {
    double gap = 0;
    std::size_t agreed = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double a = rng.normal();
      const bool degenerate = t % 4 == 0;
      const double c = degenerate ? 0.0 : rng.normal();
      const double d = (rng.uniform() < 0.5 ? -1 : 1) * std::sqrt(a * a + c * c);
      const CQ m = random_imaginary_unit(rng);
      CQ m_prime = random_imaginary_unit(rng);
      if (!degenerate) {
        // Make m' orthogonal to m so that they anticommute.
        const Complex overlap = -(m * m_prime).scalar_part();
        m_prime = m_prime - overlap.real() * m;
        m_prime = m_prime / m_prime.norm();
      }
      const CQ psi = a * CQ::one() + c * m + d * (at * m_prime);
      const auto expect = oracle::constructive_spin_direction(a, c, d, m, m_prime);
      const auto got = has_spin_direction(psi);
      if (expect && got) {
        ++agreed;
        gap = std::max(gap, direction_gap(got->direction, *expect));
      }
    }
    rec.all("solver and constructive proof both find n", n, agreed);
    rec.residual("solver n = constructive n (up to sign)", n, gap);
  }

  // Examples and errors.
  {
    const auto z_up = has_spin_direction(CQ(1, 0, 0, 0, 0, 0, 0, 1));
    const auto z_down = has_spin_direction(CQ(0, 0, 0, 1, 1, 0, 0, 0));
    const bool ok = z_up && z_down && z_up->m_z == 0.5 && z_down->m_z == -0.5 &&
                    std::abs(z_up->direction[2] - 1) < 1e-12 &&
                    std::abs(z_down->direction[2] - 1) < 1e-12 &&
                    !has_spin_direction(CQ::one());
    bool zero = false;
    try {
      (void)has_spin_direction(CQ{});
    } catch (const Error& e) {
      zero = e.code() == Errc::ZeroState;
    }
    rec.all("(1+@k): +z, +1/2; (@i+j): +z, -1/2; 1: none", 1, ok);
    rec.all("psi = 0 is rejected", 1, zero);
  }

  // Quaternionic gauge: quadric invariant, subspaces cannot be escaped.
  {
    double quad = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const CQ psi = rng.cq();
      const QuaternionGauge g{rng.direction(), rng.uniform(0, 2 * std::numbers::pi)};
      quad = std::max(quad, rel(quadric(psi * g.factor()), quadric(psi)));
    }
    rec.residual("quadric(psi e^{-n beta}) = quadric(psi)", n, quad);
    rec.floor("psi = 1 stays outside subspace 1 under every gauge", 1,
              no_escape_floor(CQ::one(), 1), 1e-3);
    rec.floor("psi = 1 stays outside subspace 2 under every gauge", 1,
              no_escape_floor(CQ::one(), 2), 1e-3);
  }

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
