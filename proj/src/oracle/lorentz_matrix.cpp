#include "cqdirac/oracle/lorentz_matrix.hpp"

#include <cmath>

namespace cqdirac::oracle {

Eigen::Matrix4d rotation_matrix(const std::array<double, 3>& n, double angle) {
  const Eigen::Vector3d u(n[0], n[1], n[2]);
  Eigen::Matrix3d cross;
  cross << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  const Eigen::Matrix3d r = std::cos(angle) * Eigen::Matrix3d::Identity() +
                            std::sin(angle) * cross +
                            (1 - std::cos(angle)) * (u * u.transpose());
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<3, 3>(1, 1) = r;
  return m;
}

Eigen::Matrix4d boost_matrix(const std::array<double, 3>& n, double rapidity) {
  const Eigen::Vector3d u(n[0], n[1], n[2]);
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);
  Eigen::Matrix4d m;
  m(0, 0) = ch;
  m.block<1, 3>(0, 1) = -sh * u.transpose();
  m.block<3, 1>(1, 0) = -sh * u;
  m.block<3, 3>(1, 1) = Eigen::Matrix3d::Identity() + (ch - 1) * (u * u.transpose());
  return m;
}

}  // namespace cqdirac::oracle
