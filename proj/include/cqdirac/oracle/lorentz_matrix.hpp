#pragma once

// Textbook 4×4 Lorentz matrices acting on (t, x, y, z). Built without any CQ
// code so the rotor sandwich can be checked against them.
//
// Rotations are active and right-handed (a quarter turn about z takes x to
// y). Boosts use the passive form t' = cosh Λ t - sinh Λ (n·x), which is the
// convention the CQ boost rotor cosh(Λ/2) + @n sinh(Λ/2) realises.

#include <array>

#include <Eigen/Dense>

namespace cqdirac::oracle {

Eigen::Matrix4d rotation_matrix(const std::array<double, 3>& n, double angle);
Eigen::Matrix4d boost_matrix(const std::array<double, 3>& n, double rapidity);

}  // namespace cqdirac::oracle
