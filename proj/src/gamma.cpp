#include "cqdirac/gamma.hpp"

#include <algorithm>

namespace cqdirac::chiral {

namespace {

using Matrix2 = Eigen::Matrix2cd;

Matrix4 blocks(const Matrix2& a, const Matrix2& b, const Matrix2& c, const Matrix2& d) {
  Matrix4 m;
  m << a, b, c, d;
  return m;
}

std::array<Matrix2, 3> pauli() {
  const Complex I{0, 1};
  Matrix2 s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  return {s1, s2, s3};
}

Eigen::Vector4cd to_vector(const ChiralSpinor& c) { return {c[0], c[1], c[2], c[3]}; }

}  // namespace

const GammaSet& GammaSet::chiral() {
  static const GammaSet set = [] {
    const Matrix2 zero = Matrix2::Zero();
    const Matrix2 one = Matrix2::Identity();
    const auto s = pauli();
    return GammaSet{{blocks(zero, one, one, zero), blocks(zero, s[0], -s[0], zero),
                     blocks(zero, s[1], -s[1], zero), blocks(zero, s[2], -s[2], zero)}};
  }();
  return set;
}

double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

ChiralSpinor chiral_dirac_residual(const ChiralSpinor& c, const FourMomentum& p,
                                   double mass, int phase_sign) {
  const auto& g = GammaSet::chiral().gamma;
  // p_μ = (E, -p_x, -p_y, -p_z)
  const Matrix4 slash = p.E * g[0] - p.px * g[1] - p.py * g[2] - p.pz * g[3];
  const Matrix4 op = -static_cast<double>(phase_sign) * slash - mass * Matrix4::Identity();
  const Eigen::Vector4cd r = op * to_vector(c);
  return {r(0), r(1), r(2), r(3)};
}

ChiralSpinor chiral_solution(const FourMomentum& p, double mass, int phase_sign, Complex c1,
                             Complex c2) {
  const auto s = pauli();
  const Matrix2 sigma_p = p.px * s[0] + p.py * s[1] + p.pz * s[2];
  const Eigen::Vector2cd upper(c1, c2);
  const Eigen::Vector2cd lower =
      (-static_cast<double>(phase_sign) / mass) * (p.E * Matrix2::Identity() + sigma_p) * upper;
  return {c1, c2, lower(0), lower(1)};
}

GammaAlgebraReport gamma_algebra_check(const GammaSet& set) {
  GammaAlgebraReport report;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const Matrix4 anti = set.gamma[mu] * set.gamma[nu] + set.gamma[nu] * set.gamma[mu];
      const Matrix4 expected = 2.0 * metric(mu, nu) * Matrix4::Identity();
      const double dev = (anti - expected).cwiseAbs().maxCoeff();
      report.entries.push_back({mu, nu, dev});
      report.max_deviation = std::max(report.max_deviation, dev);
    }
  }
  return report;
}

double max_abs(const ChiralSpinor& c) {
  double m = 0.0;
  for (const auto& v : c) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace cqdirac::chiral
