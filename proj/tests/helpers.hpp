#pragma once

#include <doctest.h>

#include "cqdirac/cq.hpp"
#include "cqdirac/error.hpp"

namespace testing {

inline bool near(const cqdirac::CQ& a, const cqdirac::CQ& b, double tol = 1e-12) {
  return cqdirac::approx_equal(a, b, tol);
}

inline bool near(cqdirac::Complex a, cqdirac::Complex b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

template <class F>
cqdirac::Errc error_code(F&& f) {
  try {
    f();
  } catch (const cqdirac::Error& e) {
    return e.code();
  }
  FAIL("expected cqdirac::Error");
  return cqdirac::Errc::ZeroState;
}

}  // namespace testing
