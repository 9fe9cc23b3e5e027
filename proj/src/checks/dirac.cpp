#include <Eigen/Dense>
#include <numbers>

#include "cqdirac/checks.hpp"
#include "cqdirac/error.hpp"
#include "cqdirac/oracle/finite_difference.hpp"
#include "cqdirac/spin.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

namespace {

constexpr double kRankThreshold = 1e-10;

// Samples where rest-frame solutions are evaluated; distinct times separate
// e^{-@mt} from e^{+@mt}.
const MinkowskiVector kSamples[] = {{0.0, 0, 0, 0}, {0.37, 0.2, -0.1, 0.5}, {1.1, 0, 0.3, 0}};

Eigen::VectorXcd complex_samples(const PlaneWaveSpinorField& f) {
  Eigen::VectorXcd v(8 * std::size(kSamples));
  int row = 0;
  for (const auto& q : kSamples) {
    const SpinorPair s = f.evaluate(q);
    for (const CQ* c : {&s.upper, &s.lower}) {
      for (int n = 0; n < 4; ++n) v(row++) = c->coeff(n);
    }
  }
  return v;
}

Eigen::VectorXd real_samples(const PlaneWaveSpinorField& f) {
  const Eigen::VectorXcd c = complex_samples(f);
  Eigen::VectorXd v(2 * c.size());
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    v(2 * n) = c(n).real();
    v(2 * n + 1) = c(n).imag();
  }
  return v;
}

template <class Matrix>
int rank_of(const Matrix& m) {
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(kRankThreshold);
  return static_cast<int>(lu.rank());
}

// Left multiplication by c as a 4×4 complex matrix on the coefficients.
Eigen::Matrix4cd left_matrix(const CQ& c) {
  const std::array<CQ, 4> units{CQ::one(), CQ::i(), CQ::j(), CQ::k()};
  Eigen::Matrix4cd m;
  for (int col = 0; col < 4; ++col) {
    const CQ img = c * units[col];
    for (int r = 0; r < 4; ++r) m(r, col) = img.coeff(r);
  }
  return m;
}

Eigen::Vector4cd as_vector(const CQ& c) {
  return {c.coeff(0), c.coeff(1), c.coeff(2), c.coeff(3)};
}

PlaneWaveSpinorField random_field(Rng& rng, double mass, PhaseSign sign) {
  return {rng.cq(), rng.cq(), detail::random_vector(rng), sign, mass};
}

}  // namespace

SolutionCounts count_rest_frame_solutions() {
  SolutionCounts counts;
  const double mass = 1.0;
  const std::array<CQ, 4> units{CQ::one(), CQ::i(), CQ::j(), CQ::k()};

  Eigen::MatrixXd real_cols(8 * 2 * std::size(kSamples), 8);
  Eigen::MatrixXcd particle(8 * std::size(kSamples), 4);
  Eigen::MatrixXcd both(8 * std::size(kSamples), 8);
  for (int n = 0; n < 4; ++n) {
    const PlaneWaveSpinorField part = RestFrameState{units[n], Species::Particle, mass}.field();
    const PlaneWaveSpinorField anti =
        RestFrameState{units[n], Species::Antiparticle, mass}.field();
    const PlaneWaveSpinorField part_at =
        RestFrameState{CQ::at() * units[n], Species::Particle, mass}.field();
    real_cols.col(n) = real_samples(part);
    real_cols.col(4 + n) = real_samples(part_at);
    particle.col(n) = complex_samples(part);
    both.col(n) = complex_samples(part);
    both.col(4 + n) = complex_samples(anti);
  }
  counts.particle_real_rank = rank_of(real_cols);
  counts.particle_complex_rank = rank_of(particle);
  counts.particle_antiparticle_complex_rank = rank_of(both);

  const Eigen::Matrix4cd sz = left_matrix(SpinOperator::z().multiplier());
  Eigen::Matrix<std::complex<double>, 4, 2> restricted;
  restricted.col(0) = as_vector(spin_subspace(1)[0]);
  restricted.col(1) = as_vector(spin_subspace(1)[1]);
  counts.restricted_complex_rank = rank_of(Eigen::MatrixXcd(restricted));
  const double eigenvalues[2] = {0.5, -0.5};
  for (int e = 0; e < 2; ++e) {
    const Eigen::Matrix4cd shifted = sz - eigenvalues[e] * Eigen::Matrix4cd::Identity();
    counts.eigenspace_complex_rank[e] = 4 - rank_of(shifted);
    counts.restricted_eigenspace_rank[e] =
        2 - rank_of(Eigen::MatrixXcd(shifted * restricted));
  }
  return counts;
}

CheckReport dirac_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("dirac", default_tolerance("dirac"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;

  // -conj(D) q = 4 and D on constants.
  {
    const Field dbar_q = apply_Dbar(LinearField::coordinate());
    rec.residual("-conj(D) q = 4", 1, rel(-std::get<CQ>(dbar_q), 4.0 * CQ::one()), 1e-15);
    rec.residual("D constant = 0", 1, std::get<CQ>(apply_D(Field{rng.cq()})).max_abs(), 1e-15);
  }

  // Rest frame.
  {
    const double m = 1.3;
    const CQ psi = rng.cq();
    const auto ok = dirac_residual(RestFrameState{psi, Species::Particle, m}.field());
    const auto ok_anti = dirac_residual(RestFrameState{psi, Species::Antiparticle, m}.field());
    rec.residual("rest particle (psi, psi) e^{-@mt} solves", 1,
                 std::max(ok.max_abs(), ok_anti.max_abs()) / std::max(1.0, m * psi.max_abs()));
    const PlaneWaveSpinorField wrong{psi, psi, {m, 0, 0, 0}, PhaseSign::Positive, m};
    rec.floor("rest (psi, psi) e^{+@mt} does not solve", 1,
              dirac_residual(wrong).max_abs() / (m * psi.max_abs()), 1.0);
    const auto made = make_solution({m, 0, 0, 0}, m, Species::Particle, psi);
    const auto made_anti = make_solution({m, 0, 0, 0}, m, Species::Antiparticle, psi);
    rec.residual("make_solution at rest gives (psi, +-psi)", 1,
                 std::max(rel(made.psi2, psi), rel(made_anti.psi2, -psi)));
  }

  // Klein–Gordon: zero iff on shell, analytic off-shell value, invariance.
  {
    double on = 0, off_value = 0, invariance = 0;
    double off_floor = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng);
      const MinkowskiVector p = detail::random_on_shell(rng, m);
      const Complex amp = rng.complex();
      const PlaneWaveScalarField phi{amp, p, PhaseSign::Positive};
      on = std::max(on, std::abs(klein_gordon_residual(phi, m)) /
                            std::max(1.0, p.energy() * p.energy() * std::abs(amp)));
      const double m_off = m * rng.uniform(1.1, 2.0);
      const Complex expect = (m_off * m_off - proper_time_sq(p)) * amp;
      const Complex got = klein_gordon_residual(phi, m_off);
      off_value = std::max(off_value, rel(got, expect) / std::max(1.0, p.energy() * p.energy()));
      off_floor = std::min(off_floor, std::abs(got) / std::abs(amp));
      const LorentzRotor r = detail::random_rotor(rng);
      const PlaneWaveScalarField moved{amp, apply_lorentz(r, p), PhaseSign::Positive};
      const Complex a = klein_gordon_residual(phi, m_off), b = klein_gordon_residual(moved, m_off);
      invariance = std::max(invariance, std::abs(a - b) /
                                            std::max(1.0, moved.momentum.cq().norm() *
                                                              moved.momentum.cq().norm()));
    }
    rec.residual("KG residual = 0 on shell", n, on);
    rec.residual("KG residual = m^2 - E^2 + p^2 off shell", n, off_value);
    rec.floor("KG residual non-zero off shell", n, off_floor, 1e-6);
    rec.residual("KG residual Lorentz invariant", n, invariance);
  }

  // Constructed solutions, dispersion, covariance, boosted rest frame.
  {
    double solved = 0, dispersion = 0, covariance = 0, boosted = 0, spin_half = 0;
    std::size_t refused = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng);
      const MinkowskiVector p = detail::random_on_shell(rng, m);
      const Species species = rng.uniform() < 0.5 ? Species::Particle : Species::Antiparticle;
      const auto psi = make_solution(p, m, species, rng.cq());
      solved = std::max(solved, dirac_residual(psi).max_abs() / detail::dirac_scale(psi));
      dispersion = std::max(dispersion, std::abs(p.energy() * p.energy() -
                                                 (p.x() * p.x() + p.y() * p.y() + p.z() * p.z()) -
                                                 m * m) /
                                            (p.energy() * p.energy()));

      const auto moved = transform_spinor(detail::random_rotor(rng), psi);
      covariance = std::max(covariance, dirac_residual(moved).max_abs() / detail::dirac_scale(moved));

      const LorentzRotor boost = LorentzRotor::boost(rng.direction(), rng.uniform(-1, 1));
      const CQ phi = rng.cq();
      const auto rest = make_solution({m, 0, 0, 0}, m, species, phi);
      const auto lhs = transform_spinor(boost, rest);
      const auto rhs = make_solution(lhs.momentum, m, species, boost.omega() * phi);
      boosted = std::max(boosted, rel(lhs.amplitudes(), rhs.amplitudes()));

      const auto turned = transform_spinor(LorentzRotor::rotation(rng.direction(),
                                                                  2 * std::numbers::pi), psi);
      spin_half = std::max(spin_half, rel(turned.amplitudes(),
                                          SpinorPair{-psi.psi1, -psi.psi2}));

      try {
        (void)make_solution({p.energy() * 1.5, p.x(), p.y(), p.z()}, m, species, phi);
      } catch (const Error& e) {
        if (e.code() == Errc::OffShell) ++refused;
      }
    }
    rec.residual("constructed solutions solve (|p| <= 10m)", n, solved);
    rec.residual("dispersion E^2 = p^2 + m^2", n, dispersion);
    rec.residual("covariance under random rotors", n, covariance);
    rec.residual("boosted rest solution = make_solution(w p, w phi)", n, boosted);
    rec.residual("2pi rotation flips the spinor", n, spin_half);
    rec.all("make_solution rejects off-shell momenta", n, refused);
  }

  // Iteration and finite differences on random (off-shell) fields.
  {
    double iteration = 0, fd = 0, fd_bar = 0;
    const double h = 1e-5;
    for (std::size_t t = 0; t < n; ++t) {
      const double m = detail::random_mass(rng);
      const PhaseSign sign = rng.uniform() < 0.5 ? PhaseSign::Negative : PhaseSign::Positive;
      const auto psi = random_field(rng, m, sign);
      const SpinorPair once = dirac_operator(psi, m);
      const PlaneWaveSpinorField mid{once.upper, once.lower, psi.momentum, sign, m};
      const SpinorPair twice = dirac_operator(mid, -m);
      const CQ pc = psi.momentum.cq();
      const Complex kg = (quat_conj(pc) * pc).scalar_part() + m * m;
      const SpinorPair expect{-(psi.psi1 * kg), -(psi.psi2 * kg)};
      iteration = std::max(iteration, rel(twice, expect) /
                                          std::max(1.0, pc.norm() * pc.norm() + m * m));

      const PlaneWave wave{rng.cq(), detail::random_vector(rng), sign};
      const MinkowskiVector q = detail::random_vector(rng);
      const auto sample = [&](const MinkowskiVector& x) { return wave.evaluate(x); };
      const CQ analytic = evaluate(apply_D(Field{wave}), q);
      const CQ analytic_bar = evaluate(apply_Dbar(Field{wave}), q);
      fd = std::max(fd, rel(analytic, oracle::finite_difference_D(sample, q, h)));
      fd_bar = std::max(fd_bar, rel(analytic_bar, oracle::finite_difference_D(sample, q, h, true)));
    }
    rec.residual("(m,D;conj D,m)(-m,D;conj D,-m) = -(KG)", n, iteration);
    rec.residual("D plane wave = central differences (h=1e-5)", n, fd, 1e-8);
    rec.residual("conj(D) plane wave = central differences", n, fd_bar, 1e-8);
  }

  // Solution counting in the rest frame.
  {
    const SolutionCounts c = count_rest_frame_solutions();
    rec.all("particle solutions: real rank 8", 1, c.particle_real_rank == 8);
    rec.all("particle solutions: complex rank 4", 1, c.particle_complex_rank == 4);
    rec.all("particle+antiparticle: complex rank 8", 1,
            c.particle_antiparticle_complex_rank == 8);
    rec.all("S_z eigenspaces: complex dim 2 each", 1,
            c.eigenspace_complex_rank[0] == 2 && c.eigenspace_complex_rank[1] == 2);
    rec.all("one spin subspace: complex dim 2, 1 per eigenvalue", 1,
            c.restricted_complex_rank == 2 && c.restricted_eigenspace_rank[0] == 1 &&
                c.restricted_eigenspace_rank[1] == 1);
  }

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
