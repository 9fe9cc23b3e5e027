#include "cqdirac/chiral.hpp"

#include "cqdirac/checks.hpp"
#include "cqdirac/error.hpp"
#include "cqdirac/spin.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

namespace {

double rel(const chiral::ChiralSpinor& a, const chiral::ChiralSpinor& b) {
  double d = 0;
  for (std::size_t n = 0; n < 4; ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d / std::max({1.0, chiral::max_abs(a), chiral::max_abs(b)});
}

chiral::ChiralSpinor random_chiral(Rng& rng) {
  return {rng.complex(), rng.complex(), rng.complex(), rng.complex()};
}

// Scale of (-sγp - m)C: amplitude size times the largest of m and |p_μ|.
double chiral_scale(const chiral::ChiralSpinor& c, const MinkowskiVector& p, double mass) {
  double pmax = mass;
  for (double v : p.components()) pmax = std::max(pmax, std::abs(v));
  return std::max(1.0, chiral::max_abs(c) * pmax);
}

}  // namespace

CheckReport chiral_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("chiral", default_tolerance("chiral"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;
  const auto& basis = spin_basis();

  {
    const auto report = chiral::gamma_algebra_check();
    rec.residual("{gamma^mu, gamma^nu} = 2 eta^{mu nu} (10 pairs)", report.entries.size(),
                 report.max_deviation, 1e-15);
  }

  double forward = 0, converse = 0, intertwine = 0, spin = 0, round = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double m = detail::random_mass(rng);
    const MinkowskiVector p = detail::random_on_shell(rng, m);
    const Species species = rng.uniform() < 0.5 ? Species::Particle : Species::Antiparticle;
    const int s = static_cast<int>(phase_sign(species));

    // Gauge-fixed CQ solution -> chiral solution.
    const CQ phi = basis[0].amplitude * rng.complex() + basis[2].amplitude * rng.complex();
    const auto psi = make_solution(p, m, species, phi);
    const auto c = chiral::cq_to_chiral(psi.amplitudes());
    forward = std::max(forward,
                       chiral::max_abs(chiral::chiral_dirac_residual(c, chiral::four_momentum(p), m, s)) /
                           chiral_scale(c, p, m));

    // Chiral solution -> CQ solution.
    const auto sol = chiral::chiral_solution(chiral::four_momentum(p), m, s, rng.complex(), rng.complex());
    const auto field = chiral::to_field(sol, p, m, phase_sign(species));
    converse = std::max(converse, dirac_residual(field).max_abs() / detail::dirac_scale(field));

    // Residual maps commute on arbitrary (off-shell) amplitudes.
    const auto any = random_chiral(rng);
    const MinkowskiVector q = detail::random_vector(rng);
    const PhaseSign sign = rng.uniform() < 0.5 ? PhaseSign::Negative : PhaseSign::Positive;
    const auto cq_side = chiral::cq_to_chiral(dirac_residual(chiral::to_field(any, q, m, sign)));
    const auto chiral_side =
        chiral::chiral_dirac_residual(any, chiral::four_momentum(q), m, static_cast<int>(sign));
    intertwine = std::max(intertwine, rel(cq_side, chiral_side) / chiral_scale(any, q, m));

    // S_z acts as diag(1/2, -1/2, 1/2, -1/2).
    const SpinorPair amps = chiral::chiral_to_cq(any);
    const SpinOperator sz = SpinOperator::z();
    const auto spun = chiral::cq_to_chiral({sz(amps.upper), sz(amps.lower)});
    spin = std::max(spin, rel(spun, {0.5 * any[0], -0.5 * any[1], 0.5 * any[2], -0.5 * any[3]}));

    round = std::max({round, rel(chiral::cq_to_chiral(amps), any),
                      rel(chiral::chiral_to_cq(c), psi.amplitudes())});
  }
  rec.residual("gauge-fixed CQ solutions solve (-s gamma.p - m)C = 0", n, forward);
  rec.residual("chiral solutions map to CQ solutions", n, converse);
  rec.residual("CQ residual maps to chiral residual", n, intertwine);
  rec.residual("S_z = diag(1/2, -1/2, 1/2, -1/2)", n, spin);
  rec.residual("cq_to_chiral and chiral_to_cq are inverse", n, round);

  bool rejected = false;
  try {
    (void)chiral::cq_to_chiral({CQ::one(), CQ{}});
  } catch (const Error& e) {
    rejected = e.code() == Errc::NotInSubspace && e.residual().has_value();
  }
  rec.all("psi1 = 1 is outside the subspace", 1, rejected);

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
