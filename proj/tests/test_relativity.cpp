#include <cmath>
#include <numbers>

#include "cqdirac/oracle/lorentz_matrix.hpp"
#include "cqdirac/random.hpp"
#include "cqdirac/relativity.hpp"
#include "helpers.hpp"

using namespace cqdirac;
using testing::error_code;
using testing::near;

TEST_SUITE("relativity") {
  TEST_CASE("scalar product") {
    const MinkowskiVector at(1, 0, 0, 0), i(0, 1, 0, 0), j(0, 0, 1, 0);
    CHECK(scalar_product(at, at) == 1.0);
    CHECK(scalar_product(i, j) == 0.0);
    Rng rng(5);
    const double e = rng.normal(), px = rng.normal(), t = rng.normal(), x = rng.normal();
    CHECK(scalar_product(MinkowskiVector(e, px, 0, 0), MinkowskiVector(t, x, 0, 0)) ==
          doctest::Approx(e * t - px * x));
    CHECK(scalar_product(at.cq(), at.cq()) == 1.0);
  }

  TEST_CASE("proper time") {
    CHECK(proper_time_sq(MinkowskiVector(1, 0, 0, 0)) == 1.0);
    CHECK(proper_time_sq(MinkowskiVector(5, 3, 4, 0)) == 0.0);
    CHECK(proper_time_sq(MinkowskiVector(0, 1, 0, 0)) == -1.0);
  }

  TEST_CASE("from_cq accepts Minkowski vectors only") {
    const MinkowskiVector v = MinkowskiVector::from_cq(CQ(0, 2, 3, 0, 0, 0, -1, 0));
    CHECK(v.t() == 2.0);
    CHECK(v.x() == 3.0);
    CHECK(v.z() == -1.0);
    CHECK(error_code([] { (void)MinkowskiVector::from_cq(CQ::one()); }) == Errc::NotMinkowski);
    CHECK(error_code([] { (void)MinkowskiVector::from_cq(CQ::at() * CQ::i()); }) ==
          Errc::NotMinkowski);
  }

  TEST_CASE("rotation rotors") {
    CHECK(LorentzRotor::rotation({0, 0, 1}, 0).omega() == CQ::one());
    CHECK(near(LorentzRotor::rotation({0, 0, 1}, 2 * std::numbers::pi).omega(), -CQ::one()));
    const CQ q = apply_lorentz(LorentzRotor::rotation({0, 0, 1}, std::numbers::pi / 2), CQ::i());
    CHECK(near(q, CQ::j()));
    CHECK(error_code([] { (void)LorentzRotor::rotation({1, 1, 0}, 1.0); }) ==
          Errc::BadDirection);
  }

  TEST_CASE("boost rotors") {
    CHECK(LorentzRotor::boost({1, 0, 0}, 0).omega() == CQ::one());
    const double l = 0.7;
    const CQ q = apply_lorentz(LorentzRotor::boost({1, 0, 0}, l), CQ::at());
    CHECK(near(q, std::cosh(l) * CQ::at() - std::sinh(l) * CQ::i()));
    const auto b = LorentzRotor::boost({1, 0, 0}, 0.3) * LorentzRotor::boost({1, 0, 0}, 0.4);
    CHECK(near(b.omega(), LorentzRotor::boost({1, 0, 0}, 0.7).omega()));
    CHECK(b.kind() == LorentzRotor::Kind::Composite);
  }

  TEST_CASE("boost agrees with the matrix oracle") {
    Rng rng(6);
    for (int n = 0; n < 20; ++n) {
      const Direction d = rng.direction();
      const double l = rng.uniform(-2, 2);
      const MinkowskiVector q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
      const MinkowskiVector out = apply_lorentz(LorentzRotor::boost(d, l), q);
      const Eigen::Vector4d expect =
          oracle::boost_matrix(d, l) * Eigen::Vector4d(q.t(), q.x(), q.y(), q.z());
      CHECK(out.t() == doctest::Approx(expect(0)));
      CHECK(out.x() == doctest::Approx(expect(1)));
      CHECK(out.y() == doctest::Approx(expect(2)));
      CHECK(out.z() == doctest::Approx(expect(3)));
    }
  }

  TEST_CASE("rotors preserve the scalar product") {
    Rng rng(7);
    const auto r = LorentzRotor::boost(rng.direction(), 0.5) *
                   LorentzRotor::rotation(rng.direction(), 1.2);
    const MinkowskiVector p(1, 2, 3, 4), q(-1, 0.5, 2, 1);
    CHECK(scalar_product(apply_lorentz(r, p), apply_lorentz(r, q)) ==
          doctest::Approx(scalar_product(p, q)));
  }

  TEST_CASE("covariant action") {
    const LorentzRotor id;
    CHECK(apply_covariant(id, CQ::i()) == CQ::i());
    const auto r = LorentzRotor::boost({0, 1, 0}, 0.4) * LorentzRotor::rotation({1, 0, 0}, 0.9);
    const CQ q = MinkowskiVector(1, 2, -1, 0.5).cq();
    CHECK(near(quat_conj(apply_lorentz(r, q)), apply_covariant(r, quat_conj(q))));
    const auto full = LorentzRotor::rotation({0, 1, 0}, 2 * std::numbers::pi);
    CHECK(near(apply_covariant(full, quat_conj(q)), quat_conj(q)));
  }

  TEST_CASE("from_omega") {
    const auto r = LorentzRotor::from_omega(LorentzRotor::boost({0, 0, 1}, 1.0).omega());
    CHECK(r.kind() == LorentzRotor::Kind::Composite);
    CHECK(error_code([] { (void)LorentzRotor::from_omega(2.0 * CQ::one()); }) ==
          Errc::BadRotor);
  }
}
