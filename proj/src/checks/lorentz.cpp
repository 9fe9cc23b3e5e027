#include <numbers>

#include "cqdirac/checks.hpp"
#include "cqdirac/oracle/lorentz_matrix.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

namespace {

Eigen::Vector4d as_vector(const MinkowskiVector& q) { return {q.t(), q.x(), q.y(), q.z()}; }

// Matrix for one factor, built only from its generating data.
Eigen::Matrix4d oracle_matrix(const LorentzRotor& r) {
  return r.kind() == LorentzRotor::Kind::Rotation
             ? oracle::rotation_matrix(r.direction(), r.parameter())
             : oracle::boost_matrix(r.direction(), r.parameter());
}

}  // namespace

CheckReport lorentz_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("lorentz", default_tolerance("lorentz"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;
  const double two_pi = 2 * std::numbers::pi;

  rec.residual("<@,@> = 1, <i,j> = 0, <i,i> = -1", 1,
               std::max({std::abs(scalar_product(MinkowskiVector(1, 0, 0, 0),
                                                 MinkowskiVector(1, 0, 0, 0)) - 1),
                         std::abs(scalar_product(MinkowskiVector(0, 1, 0, 0),
                                                 MinkowskiVector(0, 0, 1, 0))),
                         std::abs(proper_time_sq(MinkowskiVector(0, 1, 0, 0)) + 1)}));
  rec.residual("omega(2pi) = -1", 1,
               distance(LorentzRotor::rotation({0, 0, 1}, two_pi).omega(), -CQ::one()),
               1e-12);
  rec.residual("rotation k by pi/2 maps i to j", 1,
               rel(apply_lorentz(LorentzRotor::rotation({0, 0, 1}, std::numbers::pi / 2),
                                 CQ::i()),
                   CQ::j()));

  double explicit_form = 0, symmetric = 0, proper = 0;
  double isometry = 0, closure = 0, unital = 0, matrix = 0, covariant = 0, cover = 0;
  double composition = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const MinkowskiVector p = detail::random_vector(rng), q = detail::random_vector(rng);
    const double direct = p.t() * q.t() - p.x() * q.x() - p.y() * q.y() - p.z() * q.z();
    explicit_form = std::max(explicit_form, std::abs(scalar_product(p, q) - direct));
    symmetric = std::max(symmetric, std::abs(scalar_product(p, q) - scalar_product(q, p)));
    const CQ qc = q.cq();
    proper = std::max({proper, std::abs(proper_time_sq(q) - scalar_product(q, q)),
                       std::abs((quat_conj(qc) * qc - qc * quat_conj(qc)).max_abs())});

    // Composite rotor vs product of oracle matrices, factor by factor.
    const int factors = 1 + static_cast<int>(rng.uniform() * 4);
    LorentzRotor rotor;
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    for (int f = 0; f < factors; ++f) {
      const LorentzRotor step = detail::random_elementary_rotor(rng);
      rotor = step * rotor;
      m = oracle_matrix(step) * m;
    }

    const CQ raw = rotor.omega() * qc * complex_conj(quat_conj(rotor.omega()));
    closure = std::max(closure,
                       (complex_conj(raw) + quat_conj(raw)).max_abs() / std::max(1.0, raw.max_abs()));
    unital = std::max(unital, rel(rotor.omega() * quat_conj(rotor.omega()), CQ::one()));

    const MinkowskiVector pp = apply_lorentz(rotor, p), qq = apply_lorentz(rotor, q);
    const double scale = std::max(1.0, pp.cq().norm() * qq.cq().norm());
    isometry = std::max(isometry, std::abs(scalar_product(pp, qq) - scalar_product(p, q)) / scale);

    const Eigen::Vector4d expect = m * as_vector(q);
    matrix = std::max(matrix, (as_vector(qq) - expect).cwiseAbs().maxCoeff() /
                                  std::max(1.0, expect.cwiseAbs().maxCoeff()));

    covariant = std::max(covariant,
                         rel(quat_conj(apply_lorentz(rotor, qc)), apply_covariant(rotor, quat_conj(qc))));

    const Direction dir = rng.direction();
    const double theta = rng.uniform(0, two_pi);
    const LorentzRotor r1 = LorentzRotor::rotation(dir, theta);
    const LorentzRotor r2 = LorentzRotor::rotation(dir, theta + two_pi);
    cover = std::max({cover, rel(r2.omega(), -r1.omega()),
                      rel(apply_lorentz(r1, qc), apply_lorentz(r2, qc))});

    const double l1 = rng.uniform(-1, 1), l2 = rng.uniform(-1, 1);
    composition = std::max(composition, rel((LorentzRotor::boost(dir, l1) *
                                             LorentzRotor::boost(dir, l2)).omega(),
                                            LorentzRotor::boost(dir, l1 + l2).omega()));
  }
  rec.residual("<p,q> = Et - p.x", n, explicit_form);
  rec.residual("<p,q> symmetric", n, symmetric);
  rec.residual("-conj(q)q = -q conj(q) = <q,q>", n, proper);
  rec.residual("w q conj(w)* is Minkowski (q* = -conj(q))", n, closure);
  rec.residual("w conj(w) = 1 for composites", n, unital);
  rec.residual("<p',q'> = <p,q> (scale-relative)", n, isometry);
  rec.residual("sandwich = 4x4 matrix oracle", n, matrix);
  rec.residual("conj(w q conj(w)*) = w* conj(q) conj(w)", n, covariant);
  rec.residual("theta and theta+2pi: -omega, same action", n, cover);
  rec.residual("collinear boosts add rapidities", n, composition);

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
