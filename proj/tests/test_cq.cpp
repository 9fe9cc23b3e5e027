#include <sstream>

#include "cqdirac/random.hpp"
#include "helpers.hpp"

using namespace cqdirac;
using testing::error_code;
using testing::near;

TEST_SUITE("cq") {
  TEST_CASE("unit products") {
    CHECK(CQ::i() * CQ::j() == CQ::k());
    CHECK(CQ::j() * CQ::k() == CQ::i());
    CHECK(CQ::k() * CQ::i() == CQ::j());
    CHECK(CQ::j() * CQ::i() == -CQ::k());
    CHECK(CQ::i() * CQ::i() == -CQ::one());
    CHECK(CQ::at() * CQ::at() == -CQ::one());
    const CQ atk = CQ::at() * CQ::k();
    CHECK(atk * atk == CQ::one());
  }

  TEST_CASE("one is the identity and @ is central") {
    Rng rng(1);
    for (int n = 0; n < 50; ++n) {
      const CQ q = rng.cq();
      CHECK(near(CQ::one() * q, q));
      CHECK(near(q * CQ::one(), q));
      CHECK(near(CQ::at() * q, q * CQ::at()));
    }
  }

  TEST_CASE("complex conjugation") {
    CHECK(complex_conj(CQ::at()) == -CQ::at());
    CHECK(complex_conj(CQ::i()) == CQ::i());
    const CQ a = CQ::i() + CQ::at() * CQ::j();
    const CQ b = CQ::j() + CQ::at() * CQ::k();
    CHECK(near(complex_conj(a * b), complex_conj(a) * complex_conj(b)));
  }

  TEST_CASE("quaternionic conjugation") {
    CHECK(quat_conj(CQ::i()) == -CQ::i());
    CHECK(quat_conj(CQ::at()) == CQ::at());
    CHECK(quat_conj(CQ::i() * CQ::j()) == -CQ::k());
    Rng rng(2);
    for (int n = 0; n < 50; ++n) {
      const CQ a = rng.cq(), b = rng.cq();
      CHECK(near(quat_conj(a * b), quat_conj(b) * quat_conj(a)));
    }
  }

  TEST_CASE("trace and quadric") {
    CHECK(trace(CQ::one()) == Complex(1, 0));
    CHECK(trace(CQ::i()) == Complex(0, 0));
    CHECK(quadric(CQ::one() + CQ::at() * CQ::k()) == Complex(0, 0));
    CHECK(quadric(CQ::one()) == Complex(1, 0));
    CHECK(quadric(CQ::i() + CQ::at() * CQ::j()) == Complex(0, 0));
    Rng rng(3);
    const CQ p = rng.cq(), q = rng.cq();
    CHECK(near(trace(p * q), trace(q * p)));
  }

  TEST_CASE("invert") {
    CHECK(invert(CQ::at()) == -CQ::at());
    CHECK(near(invert(2.0 * CQ::i()), -0.5 * CQ::i()));
    CHECK(error_code([] { (void)invert(CQ::one() + CQ::at() * CQ::k()); }) ==
          Errc::NotInvertible);
    CHECK(error_code([] { (void)invert(CQ{}); }) == Errc::NotInvertible);
    CHECK(is_null(CQ::i() + CQ::at() * CQ::j()));
    CHECK_FALSE(is_null(CQ::one()));
  }

  TEST_CASE("invert attaches the quadric as residual") {
    try {
      (void)invert(CQ::one() + CQ::at() * CQ::k());
      FAIL("expected NotInvertible");
    } catch (const Error& e) {
      REQUIRE(e.residual().has_value());
      CHECK(*e.residual() == doctest::Approx(0.0));
    }
  }

  TEST_CASE("matrix isomorphism") {
    const Matrix2C id = to_matrix(CQ::one());
    CHECK(id == Matrix2C::identity());
    CHECK(to_matrix(CQ::one() + CQ::at() * CQ::k()).det() == Complex(0, 0));
    CHECK(to_matrix(CQ::at()) == Complex(0, 1) * Matrix2C::identity());
    Rng rng(4);
    for (int n = 0; n < 50; ++n) {
      const CQ a = rng.cq(), b = rng.cq();
      CHECK((to_matrix(a * b) - to_matrix(a) * to_matrix(b)).max_abs() < 1e-12 * 100);
      CHECK(near(from_matrix(to_matrix(a)), a));
      CHECK(near(to_matrix(a).det(), quadric(a)));
    }
  }

  TEST_CASE("Pauli images of i, j, k square to -1") {
    for (const CQ& u : {CQ::i(), CQ::j(), CQ::k()}) {
      const Matrix2C m = to_matrix(u);
      CHECK((m * m + Matrix2C::identity()).max_abs() == 0.0);
    }
  }

  TEST_CASE("text form") {
    CHECK(to_string(CQ{}) == "0");
    CHECK(to_string(CQ::one()) == "1");
    CHECK(to_string(CQ(1, 2, -3, 0, 0, 0, 0, 1)) == "1+2@-3i+1@k");
    std::ostringstream os;
    os << CQ::at();
    CHECK(os.str() == "1@");
  }

  TEST_CASE("scalar and vector parts") {
    const CQ q(1, 2, 3, 4, 5, 6, 7, 8);
    CHECK(q.scalar_part() == Complex(1, 2));
    CHECK(q.vector_part() == CQ(0, 0, 3, 4, 5, 6, 7, 8));
    CHECK(q.coeff(3) == Complex(7, 8));
    CHECK(CQ::from_coefficients(q.coefficients()) == q);
  }
}
