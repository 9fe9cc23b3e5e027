#include "cqdirac/spin.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cqdirac/error.hpp"
#include "cqdirac/random.hpp"

namespace cqdirac {

namespace {

// Hermitian inner product of the coefficient vectors in C^4.
Complex inner(const CQ& a, const CQ& b) {
  Complex s{};
  for (int n = 0; n < 4; ++n) s += std::conj(a.coeff(n)) * b.coeff(n);
  return s;
}

// Each spin basis amplitude has |b|² = 2 and the four are mutually orthogonal.
constexpr double kBasisNormSq = 2.0;

bool lexicographically_negative(const Direction& n) {
  for (int axis : {2, 1, 0}) {
    if (std::abs(n[axis]) > 1e-12) return n[axis] < 0;
  }
  return false;
}

}  // namespace

SpinOperator::SpinOperator(const Direction& e)
    : direction_(e), multiplier_(0.5 * (CQ::at() * direction_quaternion(e))) {}

PlaneWaveSpinorField RestFrameState::field() const {
  const bool particle = species == Species::Particle;
  return {amplitude, particle ? amplitude : -amplitude, MinkowskiVector(mass, 0, 0, 0),
          phase_sign(species), mass};
}

RestFrameState apply_spin(const SpinOperator& op, const RestFrameState& s) {
  return {op(s.amplitude), s.species, s.mass};
}

CQ ladder_multiplier(LadderSign sign) {
  const CQ sx = 0.5 * (CQ::at() * CQ::i());
  const CQ sy = 0.5 * (CQ::at() * CQ::j());
  return sign == LadderSign::Raise ? sx + CQ::at() * sy : sx - CQ::at() * sy;
}

RestFrameState ladder(LadderSign sign, const RestFrameState& s) {
  return {ladder_multiplier(sign) * s.amplitude, s.species, s.mass};
}

const std::array<SpinBasisState, 4>& spin_basis() {
  static const std::array<SpinBasisState, 4> basis{{
      {CQ(1, 0, 0, 0, 0, 0, 0, 1), 0.5, 1, "(1+@k)"},
      {CQ(0, 0, 1, 0, 0, 1, 0, 0), 0.5, 2, "(i+@j)"},
      {CQ(0, 0, 0, 1, 1, 0, 0, 0), -0.5, 1, "(@i+j)"},
      {CQ(0, -1, 0, 0, 0, 0, -1, 0), -0.5, 2, "(-@-k)"},
  }};
  return basis;
}

std::array<CQ, 2> spin_subspace(int subspace) {
  const auto& b = spin_basis();
  return subspace == 1 ? std::array<CQ, 2>{b[0].amplitude, b[2].amplitude}
                       : std::array<CQ, 2>{b[1].amplitude, b[3].amplitude};
}

double subspace_residual(const CQ& psi, int subspace) {
  CQ projection;
  for (const CQ& b : spin_subspace(subspace)) {
    projection += b * (inner(b, psi) / kBasisNormSq);
  }
  const double n = psi.norm();
  return n == 0.0 ? 0.0 : (psi - projection).norm() / n;
}

std::optional<SpinDirection> has_spin_direction(const CQ& psi, double threshold) {
  if (psi.is_zero()) throw Error(Errc::ZeroState, "ψ = 0 has no spin");
  if (!is_null(psi, threshold)) return std::nullopt;

  // n ψ = -@ψ, i.e. (@/2) n ψ = +½ ψ, as eight real equations.
  Eigen::Matrix<double, 8, 3> a;
  Eigen::Matrix<double, 8, 1> b;
  const std::array<CQ, 3> units{CQ::i(), CQ::j(), CQ::k()};
  for (int c = 0; c < 3; ++c) {
    const auto col = (units[c] * psi).raw();
    for (int r = 0; r < 8; ++r) a(r, c) = col[r];
  }
  const auto rhs = (-(CQ::at() * psi)).raw();
  for (int r = 0; r < 8; ++r) b(r) = rhs[r];
  const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(b);

  const double len = sol.norm();
  if (!(len > 0.0)) return std::nullopt;
  Direction n{sol(0) / len, sol(1) / len, sol(2) / len};
  const CQ lhs = 0.5 * (CQ::at() * CQ::quaternion(0, n[0], n[1], n[2]) * psi);
  if ((lhs - 0.5 * psi).norm() > 1e-6 * psi.norm()) return std::nullopt;

  if (lexicographically_negative(n)) return SpinDirection{{-n[0], -n[1], -n[2]}, -0.5};
  return SpinDirection{n, 0.5};
}

std::array<Complex, 4> decompose_psi0(const CQ& psi) {
  const auto& basis = spin_basis();
  std::array<Complex, 4> c;
  for (std::size_t n = 0; n < 4; ++n) c[n] = inner(basis[n].amplitude, psi) / kBasisNormSq;
  return c;
}

CQ recompose(const std::array<Complex, 4>& coefficients) {
  CQ sum;
  for (std::size_t n = 0; n < 4; ++n) sum += spin_basis()[n].amplitude * coefficients[n];
  return sum;
}

CQ QuaternionGauge::factor() const {
  return std::cos(beta) * CQ::one() - std::sin(beta) * direction_quaternion(n);
}

RestFrameState apply_quaternion_gauge(const QuaternionGauge& g, const RestFrameState& s) {
  return {s.amplitude * g.factor(), s.species, s.mass};
}

PlaneWaveSpinorField apply_quaternion_gauge(const QuaternionGauge& g,
                                            const PlaneWaveSpinorField& psi) {
  const CQ f = g.factor();
  return {psi.psi1 * f, psi.psi2 * f, psi.momentum, psi.sign, psi.mass};
}

GaugedConfiguration apply_u1_gauge(const U1Gauge& g, const PlaneWaveSpinorField& psi,
                                   const PotentialField& potential) {
  const auto* alpha = std::get_if<LinearScalarFunction>(&g.alpha);
  if (alpha == nullptr) {
    throw Error(Errc::UnsupportedField,
                "only linear gauge functions keep plane waves in the family");
  }
  const double s = to_double(psi.sign);
  const Complex global = phase(-g.charge * alpha->offset);
  PlaneWaveSpinorField out{psi.psi1 * global, psi.psi2 * global,
                           psi.momentum - (s * g.charge) * alpha->gradient, psi.sign,
                           psi.mass};
  return {out, potential + apply_D(*alpha)};
}

NormalDecomposition decompose_normal(const CQ& sigma, double tol) {
  const double scale = std::max(1.0, sigma.norm() * sigma.norm());
  const double defect =
      distance(sigma * complex_conj(quat_conj(sigma)), CQ::one()) / scale;
  if (defect > tol) {
    throw Error(Errc::NotNormal, "Σ conj(Σ)* != 1 for Σ = " + to_string(sigma), defect);
  }
  const auto coeff = sigma.coefficients();
  std::size_t lead = 0;
  for (std::size_t n = 1; n < 4; ++n) {
    if (std::abs(coeff[n]) > std::abs(coeff[lead])) lead = n;
  }
  const Complex unit = coeff[lead] / std::abs(coeff[lead]);
  std::array<double, 4> q{};
  double imag_defect = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    const Complex v = coeff[n] / unit;
    q[n] = v.real();
    imag_defect = std::max(imag_defect, std::abs(v.imag()));
  }
  if (imag_defect > tol * std::max(1.0, sigma.max_abs())) {
    throw Error(Errc::NotNormal, "Σ is not a complex multiple of a real quaternion",
                imag_defect);
  }
  const double len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  double sign = 1.0;
  for (double v : q) {
    if (std::abs(v) > 1e-12 * len) {
      sign = v < 0 ? -1.0 : 1.0;
      break;
    }
  }
  const double f = sign / len;
  return {unit * (len * sign), CQ::quaternion(q[0] * f, q[1] * f, q[2] * f, q[3] * f)};
}

CQ compensating_field(const CQ& psi, const Direction& n) {
  return CQ::i() * psi * direction_quaternion(n) * invert(psi);
}

double obstruction_mismatch(const CQ& first, const CQ& second, const Direction& n) {
  const CQ x1 = compensating_field(first, n);
  const CQ x2 = compensating_field(second, n);
  const double scale = std::max(x1.norm(), x2.norm());
  return scale == 0.0 ? 0.0 : (x1 - x2).norm() / scale;
}

ObstructionReport local_gauge_obstruction_demo(std::uint64_t seed, std::size_t generic_pairs) {
  Rng rng(seed);
  ObstructionReport report;
  report.n = rng.direction();
  const CQ base = rng.cq();
  const Complex lambda = rng.complex();
  report.rows.push_back({base, base, obstruction_mismatch(base, base, report.n)});
  report.rows.push_back(
      {base, base * lambda, obstruction_mismatch(base, base * lambda, report.n)});
  std::size_t positive = 0;
  for (std::size_t t = 0; t < generic_pairs; ++t) {
    const CQ a = rng.cq();
    const CQ b = rng.cq();
    const double m = obstruction_mismatch(a, b, report.n);
    if (m > 1e-3) ++positive;
    report.rows.push_back({a, b, m});
  }
  report.generic_pairs = generic_pairs;
  report.generic_positive_fraction =
      generic_pairs == 0 ? 0.0 : static_cast<double>(positive) / generic_pairs;
  return report;
}

double no_escape_floor(const CQ& psi, int subspace) {
  constexpr int kAxis = 32;
  constexpr int kAngles = 64;
  double best = std::numeric_limits<double>::infinity();
  for (int a = 0; a < kAxis; ++a) {
    for (int b = 0; b < kAxis; ++b) {
      for (int c = 0; c < kAxis; ++c) {
        // Cell centres of [-1, 1]³; never the origin.
        const double v[3] = {(2.0 * a + 1) / kAxis - 1, (2.0 * b + 1) / kAxis - 1,
                             (2.0 * c + 1) / kAxis - 1};
        const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        const CQ n = CQ::quaternion(0, v[0] / len, v[1] / len, v[2] / len);
        for (int m = 0; m < kAngles; ++m) {
          const double beta = 2.0 * std::numbers::pi * m / kAngles;
          const CQ gauged = psi * (std::cos(beta) * CQ::one() - std::sin(beta) * n);
          best = std::min(best, subspace_residual(gauged, subspace));
        }
      }
    }
  }
  return best;
}

}  // namespace cqdirac
