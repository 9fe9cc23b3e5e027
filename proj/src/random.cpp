#include "cqdirac/random.hpp"

#include <cmath>
#include <numbers>

namespace cqdirac {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::array<double, 3> Rng::direction() {
  for (;;) {
    std::array<double, 3> v{normal(), normal(), normal()};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n < 1e-8) continue;
    return {v[0] / n, v[1] / n, v[2] / n};
  }
}

CQ Rng::cq() {
  std::array<double, 8> c{};
  for (double& v : c) v = normal();
  return {c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]};
}

Complex Rng::complex() {
  const double re = normal();
  return {re, normal()};
}

CQ Rng::unit_quaternion() {
  for (;;) {
    const double w = normal(), x = normal(), y = normal(), z = normal();
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n < 1e-8) continue;
    return CQ::quaternion(w / n, x / n, y / n, z / n);
  }
}

}  // namespace cqdirac
