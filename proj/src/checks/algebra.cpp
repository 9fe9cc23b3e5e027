#include "cqdirac/checks.hpp"
#include "cqdirac/error.hpp"
#include "suite_util.hpp"

namespace cqdirac::checks {

using detail::rel;

CheckReport algebra_suite(const Options& options) {
  detail::Stopwatch clock;
  Recorder rec("algebra", default_tolerance("algebra"), options);
  Rng rng(options.seed);
  const std::size_t n = options.cases;

  rec.residual("i*j = k", 1, rel(CQ::i() * CQ::j(), CQ::k()));
  rec.residual("(@k)(@k) = 1", 1,
               rel((CQ::at() * CQ::k()) * (CQ::at() * CQ::k()), CQ::one()));

  double assoc = 0, distrib = 0, central = 0, cconj = 0, qconj = 0, cyclic = 0;
  double quadric_vec = 0, det_quadric = 0, hom = 0, roundtrip = 0, inverse = 0;
  std::size_t inverted = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const CQ a = rng.cq(), b = rng.cq(), c = rng.cq();
    assoc = std::max(assoc, rel((a * b) * c, a * (b * c)));
    distrib = std::max(distrib, rel(a * (b + c), a * b + a * c));
    distrib = std::max(distrib, rel((a + b) * c, a * c + b * c));
    central = std::max(central, rel(CQ::at() * a, a * CQ::at()));
    cconj = std::max(cconj, rel(complex_conj(a * b), complex_conj(a) * complex_conj(b)));
    qconj = std::max(qconj, rel(quat_conj(a * b), quat_conj(b) * quat_conj(a)));
    cyclic = std::max(cyclic, rel(trace(a * b), trace(b * a)));
    const CQ aa = a * quat_conj(a);
    quadric_vec = std::max(quadric_vec, aa.vector_part().max_abs() / std::max(1.0, aa.max_abs()));
    det_quadric = std::max(det_quadric, rel(to_matrix(a).det(), quadric(a)));
    const Matrix2C lhs = to_matrix(a * b);
    const Matrix2C rhs = to_matrix(a) * to_matrix(b);
    hom = std::max(hom, (lhs - rhs).max_abs() / std::max({1.0, lhs.max_abs(), rhs.max_abs()}));
    roundtrip = std::max(roundtrip, rel(from_matrix(to_matrix(a)), a));
    try {
      const CQ inv = invert(a);
      inverse = std::max(inverse, rel(inv * a, CQ::one()) / std::max(1.0, inv.max_abs()));
      inverse = std::max(inverse, rel(a * inv, CQ::one()) / std::max(1.0, inv.max_abs()));
      ++inverted;
    } catch (const Error&) {
    }
  }
  rec.residual("associativity", n, assoc);
  rec.residual("distributivity", n, distrib);
  rec.residual("centrality of @", n, central);
  rec.residual("(ab)* = a* b*", n, cconj);
  rec.residual("conj(ab) = conj(b) conj(a)", n, qconj);
  rec.residual("tr(ab) = tr(ba)", n, cyclic);
  rec.residual("a conj(a) has no i,j,k part", n, quadric_vec);
  rec.residual("det(to_matrix(a)) = quadric(a)", n, det_quadric);
  rec.residual("to_matrix(ab) = to_matrix(a) to_matrix(b)", n, hom);
  rec.residual("from_matrix(to_matrix(a)) = a", n, roundtrip);
  rec.residual("invert(a) a = 1", inverted, inverse);

  // Null elements: rank-one matrices have vanishing quadric and refuse to invert.
  std::size_t refused = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const Complex u1 = rng.complex(), u2 = rng.complex(), v1 = rng.complex(), v2 = rng.complex();
    const CQ null = from_matrix({u1 * v1, u1 * v2, u2 * v1, u2 * v2});
    try {
      (void)invert(null);
    } catch (const Error& e) {
      if (e.code() == Errc::NotInvertible) ++refused;
    }
  }
  rec.all("invert rejects null elements", n, refused);

  return std::move(rec).finish(clock.elapsed_ms());
}

}  // namespace cqdirac::checks
