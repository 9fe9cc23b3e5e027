#include "cqdirac/cq.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "cqdirac/error.hpp"

namespace cqdirac {

double CQ::norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

double CQ::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

CQ& CQ::operator+=(const CQ& o) {
  for (std::size_t n = 0; n < 8; ++n) c_[n] += o.c_[n];
  return *this;
}

CQ& CQ::operator-=(const CQ& o) {
  for (std::size_t n = 0; n < 8; ++n) c_[n] -= o.c_[n];
  return *this;
}

CQ& CQ::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

CQ& CQ::operator*=(Complex s) {
  auto q = coefficients();
  for (auto& v : q) v *= s;
  return *this = from_coefficients(q);
}

CQ operator*(const CQ& a, const CQ& b) {
  // (a0 + a)(b0 + b) = a0 b0 - a.b + a0 b + b0 a + a x b, C-bilinear.
  const auto p = a.coefficients();
  const auto q = b.coefficients();
  return CQ::from_coefficients(
      p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
      p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
      p[0] * q[2] + p[2] * q[0] + p[3] * q[1] - p[1] * q[3],
      p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]);
}

CQ complex_conj(const CQ& a) {
  return {a.w(), -a.wI(), a.x(), -a.xI(), a.y(), -a.yI(), a.z(), -a.zI()};
}

CQ quat_conj(const CQ& a) {
  return {a.w(), a.wI(), -a.x(), -a.xI(), -a.y(), -a.yI(), -a.z(), -a.zI()};
}

Complex trace(const CQ& a) { return a.scalar_part(); }

Complex quadric(const CQ& a) { return (a * quat_conj(a)).scalar_part(); }

bool is_null(const CQ& a, double threshold) {
  const double n = a.norm();
  return std::abs(quadric(a)) <= threshold * n * n;
}

CQ invert(const CQ& a, double threshold) {
  if (is_null(a, threshold)) {
    throw Error(Errc::NotInvertible, "quadric of " + to_string(a) + " vanishes",
                std::abs(quadric(a)));
  }
  return quat_conj(a) / quadric(a);
}

double distance(const CQ& a, const CQ& b) { return (a - b).max_abs(); }

bool approx_equal(const CQ& a, const CQ& b, double tol) {
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return distance(a, b) <= tol * scale;
}

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string to_string(const CQ& a) {
  static constexpr const char* kUnits[8] = {"", "@", "i", "@i", "j", "@j", "k", "@k"};
  std::string out;
  for (std::size_t n = 0; n < 8; ++n) {
    const double v = a.raw()[n];
    if (v == 0.0) continue;
    if (!out.empty() && !std::signbit(v)) out += '+';
    append_number(out, v);
    out += kUnits[n];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CQ& a) { return os << to_string(a); }

double Matrix2C::max_abs() const {
  return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
}

Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Matrix2C operator+(const Matrix2C& a, const Matrix2C& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Matrix2C operator-(const Matrix2C& a, const Matrix2C& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

Matrix2C operator*(Complex s, const Matrix2C& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix2C to_matrix(const CQ& a) {
  // q0 I - 𝕚(q1 σ1 + q2 σ2 + q3 σ3)
  const auto q = a.coefficients();
  return {q[0] - kI * q[3], -kI * q[1] - q[2],
          -kI * q[1] + q[2], q[0] + kI * q[3]};
}

CQ from_matrix(const Matrix2C& m) {
  return CQ::from_coefficients(0.5 * (m.m11 + m.m22),
                               0.5 * kI * (m.m12 + m.m21),
                               0.5 * (m.m21 - m.m12),
                               0.5 * kI * (m.m11 - m.m22));
}

}  // namespace cqdirac
