#include "cqdirac/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cqdirac/error.hpp"

namespace cqdirac {

namespace {

CQ bar_star(const CQ& a) { return complex_conj(quat_conj(a)); }

struct PointValues {
  CQ psi1, psi2, dbar_psi1, d_psi2;
};

PointValues evaluate_at(SpinorWaves psi, const MinkowskiVector& q) {
  PointValues v;
  for (const auto& w : psi) {
    const Complex ph = w.phase_at(q);
    const double s = to_double(w.sign);
    const CQ p = w.momentum.cq();
    const CQ a1 = w.psi1 * ph;
    const CQ a2 = w.psi2 * ph;
    v.psi1 += a1;
    v.psi2 += a2;
    v.dbar_psi1 += s * (CQ::at() * quat_conj(p) * a1);
    v.d_psi2 += s * (CQ::at() * p * a2);
  }
  return v;
}

// Neumaier summation of complex values.
class CompensatedSum {
 public:
  void add(Complex v) {
    add(re_, re_c_, v.real());
    add(im_, im_c_, v.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add(double& sum, double& comp, double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

bool closes(double wave_number, double extent) {
  const double cycles = wave_number * extent / (2.0 * std::numbers::pi);
  return std::abs(cycles - std::round(cycles)) <= 1e-9 * std::max(1.0, std::abs(cycles));
}

}  // namespace

Complex l0_density(SpinorWaves psi, double mass, const MinkowskiVector& q) {
  const PointValues v = evaluate_at(psi, q);
  const CQ a1 = bar_star(v.psi1);
  const CQ a2 = bar_star(v.psi2);
  return trace(a1 * v.dbar_psi1 + a2 * v.d_psi2 - mass * (a1 * v.psi2) -
               mass * (a2 * v.psi1));
}

Complex l0_density(const PlaneWaveSpinorField& psi, double mass, const MinkowskiVector& q) {
  return l0_density(SpinorWaves(&psi, 1), mass, q);
}

Complex l_int_density(SpinorWaves psi, const PotentialField& potential, double charge,
                      const MinkowskiVector& q) {
  const PointValues v = evaluate_at(psi, q);
  const CQ a = potential.evaluate(q);
  const CQ coupling = charge * CQ::at();
  return trace(coupling * (bar_star(v.psi1) * quat_conj(a) * v.psi1) +
               coupling * (bar_star(v.psi2) * a * v.psi2));
}

Complex l_int_density(const PlaneWaveSpinorField& psi, const PotentialField& potential,
                      double charge, const MinkowskiVector& q) {
  return l_int_density(SpinorWaves(&psi, 1), potential, charge, q);
}

FieldStrength field_strength(const PotentialField& potential, const MinkowskiVector& q) {
  const CQ g = potential.dbar_at(q);
  return {0.5 * (g - quat_conj(g))};
}

Complex la_density_complex(const PotentialField& potential, const MinkowskiVector& q) {
  const CQ f = field_strength(potential, q).F;
  const CQ fs = complex_conj(f);
  return 0.25 * (f * f + fs * fs).scalar_part();
}

double la_density(const PotentialField& potential, const MinkowskiVector& q) {
  return la_density_complex(potential, q).real();
}

Complex lqed_density(SpinorWaves psi, const PotentialField& potential, double mass,
                     double charge, const MinkowskiVector& q) {
  return l0_density(psi, mass, q) + l_int_density(psi, potential, charge, q) +
         la_density_complex(potential, q);
}

bool is_symmetry(const CQ& sigma, double tol) {
  const double scale = std::max(1.0, sigma.norm() * sigma.norm());
  return distance(sigma * bar_star(sigma), CQ::one()) <= tol * scale;
}

Complex discrete_action(SpinorWaves psi, double mass, const Box& box, int points_per_axis) {
  for (const auto& w : psi) {
    const auto p = w.momentum.components();
    for (std::size_t axis = 0; axis < 4; ++axis) {
      if (!closes(p[axis], box[axis])) {
        throw Error(Errc::IncommensurateMomenta,
                    "plane wave does not close over the box on axis " +
                        std::to_string(axis));
      }
    }
  }
  const int n = points_per_axis;
  std::array<double, 4> step{};
  double cell = 1.0;
  for (std::size_t axis = 0; axis < 4; ++axis) {
    step[axis] = box[axis] / n;
    cell *= step[axis];
  }
  CompensatedSum sum;
  for (int it = 0; it < n; ++it) {
    for (int ix = 0; ix < n; ++ix) {
      for (int iy = 0; iy < n; ++iy) {
        for (int iz = 0; iz < n; ++iz) {
          const MinkowskiVector q(it * step[0], ix * step[1], iy * step[2], iz * step[3]);
          sum.add(l0_density(psi, mass, q));
        }
      }
    }
  }
  return sum.value() * cell;
}

}  // namespace cqdirac
