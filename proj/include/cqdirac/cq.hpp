#pragma once

/**
 * @file cq.hpp
 * @brief Complex quaternions (biquaternions), the algebra C ⊗ H.
 *
 * A CQ is q = q0 + q1 i + q2 j + q3 k with complex coefficients
 * qn = re + @ im. The complex unit @ commutes with i, j, k, so the product
 * is the quaternion product extended C-bilinearly (no conjugation of the
 * coefficients). Two involutions exist:
 *
 *   complex_conj  @ -> -@, i,j,k fixed     (o1 o2)* = o1* o2*
 *   quat_conj     i,j,k -> -i,-j,-k, @ fixed  conj(o1 o2) = conj(o2) conj(o1)
 *
 * C ⊗ H is isomorphic to M2(C) but is not a division algebra: q is
 * invertible iff its quadric q0² + q1² + q2² + q3² is non-zero.
 */

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

namespace cqdirac {

using Complex = std::complex<double>;

/// Default absolute tolerance for unit-scale comparisons.
inline constexpr double kTolerance = 1e-12;

/// |quadric(a)| <= kNullThreshold * norm(a)² classifies a as null.
inline constexpr double kNullThreshold = 1e-10;

class CQ {
 public:
  constexpr CQ() = default;
  constexpr CQ(double w, double wI, double x, double xI, double y, double yI,
               double z, double zI)
      : c_{w, wI, x, xI, y, yI, z, zI} {}

  /// Builds q0 + q1 i + q2 j + q3 k from its four complex coefficients.
  static CQ from_coefficients(Complex q0, Complex q1, Complex q2, Complex q3) {
    return {q0.real(), q0.imag(), q1.real(), q1.imag(),
            q2.real(), q2.imag(), q3.real(), q3.imag()};
  }
  static CQ from_coefficients(const std::array<Complex, 4>& q) {
    return from_coefficients(q[0], q[1], q[2], q[3]);
  }
  static CQ scalar(Complex s) { return {s.real(), s.imag(), 0, 0, 0, 0, 0, 0}; }
  /// Real quaternion w + xi + yj + zk.
  static constexpr CQ quaternion(double w, double x, double y, double z) {
    return {w, 0, x, 0, y, 0, z, 0};
  }

  static constexpr CQ one() { return {1, 0, 0, 0, 0, 0, 0, 0}; }
  static constexpr CQ at() { return {0, 1, 0, 0, 0, 0, 0, 0}; }
  static constexpr CQ i() { return {0, 0, 1, 0, 0, 0, 0, 0}; }
  static constexpr CQ j() { return {0, 0, 0, 0, 1, 0, 0, 0}; }
  static constexpr CQ k() { return {0, 0, 0, 0, 0, 0, 1, 0}; }

  constexpr double w() const { return c_[0]; }
  constexpr double wI() const { return c_[1]; }
  constexpr double x() const { return c_[2]; }
  constexpr double xI() const { return c_[3]; }
  constexpr double y() const { return c_[4]; }
  constexpr double yI() const { return c_[5]; }
  constexpr double z() const { return c_[6]; }
  constexpr double zI() const { return c_[7]; }

  /// Complex coefficient of basis element n (0 -> 1, 1 -> i, 2 -> j, 3 -> k).
  Complex coeff(int n) const { return {c_[2 * n], c_[2 * n + 1]}; }
  std::array<Complex, 4> coefficients() const {
    return {coeff(0), coeff(1), coeff(2), coeff(3)};
  }
  /// Raw layout (w, wI, x, xI, y, yI, z, zI).
  constexpr const std::array<double, 8>& raw() const { return c_; }

  Complex scalar_part() const { return coeff(0); }
  CQ vector_part() const { return {0, 0, c_[2], c_[3], c_[4], c_[5], c_[6], c_[7]}; }

  /// Euclidean norm of the eight real coefficients.
  double norm() const;
  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  CQ& operator+=(const CQ& o);
  CQ& operator-=(const CQ& o);
  CQ& operator*=(const CQ& o) { return *this = *this * o; }
  CQ& operator*=(Complex s);
  CQ& operator*=(double s);
  CQ& operator/=(double s) { return *this *= (1.0 / s); }

  friend CQ operator+(CQ a, const CQ& b) { return a += b; }
  friend CQ operator-(CQ a, const CQ& b) { return a -= b; }
  friend CQ operator*(const CQ& a, const CQ& b);
  friend CQ operator*(CQ a, Complex s) { return a *= s; }
  friend CQ operator*(Complex s, CQ a) { return a *= s; }
  friend CQ operator*(CQ a, double s) { return a *= s; }
  friend CQ operator*(double s, CQ a) { return a *= s; }
  friend CQ operator/(CQ a, double s) { return a /= s; }
  friend CQ operator/(CQ a, Complex s) { return a *= (1.0 / s); }
  CQ operator-() const { return *this * -1.0; }

  friend constexpr bool operator==(const CQ&, const CQ&) = default;

 private:
  std::array<double, 8> c_{};
};

CQ complex_conj(const CQ& a);
CQ quat_conj(const CQ& a);

/// tr(q) = (q + conj(q)) / 2, the complex scalar part.
Complex trace(const CQ& a);

/// Scalar part of a·conj(a) = q0² + q1² + q2² + q3².
Complex quadric(const CQ& a);

/// True when |quadric(a)| <= threshold · norm(a)².
bool is_null(const CQ& a, double threshold = kNullThreshold);

/// conj(a) / quadric(a). Throws Error(NotInvertible) for null a.
CQ invert(const CQ& a, double threshold = kNullThreshold);

/// e^{@θ} as a complex scalar.
inline Complex phase(double theta) { return std::polar(1.0, theta); }

/// Max-abs coefficient difference.
double distance(const CQ& a, const CQ& b);

/// distance(a, b) <= tol · max(1, scale of a and b).
bool approx_equal(const CQ& a, const CQ& b, double tol = kTolerance);

/// Canonical text form "w+wI@+xi+xI@i+yj+yI@j+zk+zI@k", zero terms omitted.
std::string to_string(const CQ& a);
std::ostream& operator<<(std::ostream& os, const CQ& a);

struct Matrix2C {
  Complex m11, m12, m21, m22;

  static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex det() const { return m11 * m22 - m12 * m21; }
  double max_abs() const;

  friend Matrix2C operator*(const Matrix2C& a, const Matrix2C& b);
  friend Matrix2C operator+(const Matrix2C& a, const Matrix2C& b);
  friend Matrix2C operator-(const Matrix2C& a, const Matrix2C& b);
  friend Matrix2C operator*(Complex s, const Matrix2C& a);
  friend bool operator==(const Matrix2C&, const Matrix2C&) = default;
};

/// The C-algebra isomorphism C ⊗ H -> M2(C):
/// 1 -> I, i -> -𝕚σ1, j -> -𝕚σ2, k -> -𝕚σ3, @ -> 𝕚I.
/// det(to_matrix(a)) == quadric(a).
Matrix2C to_matrix(const CQ& a);
CQ from_matrix(const Matrix2C& m);

}  // namespace cqdirac
