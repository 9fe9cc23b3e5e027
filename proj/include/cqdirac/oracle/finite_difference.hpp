#pragma once

// Central-difference evaluation of D = @∂t - i∂x - j∂y - k∂z (and conj(D))
// on any field that can be sampled pointwise. Error is O(h²).

#include <array>

#include "cqdirac/cq.hpp"
#include "cqdirac/relativity.hpp"

namespace cqdirac::oracle {

template <class F>
CQ finite_difference_D(F&& field, const MinkowskiVector& q, double h, bool bar = false) {
  const std::array<CQ, 4> units{CQ::at(), CQ::i(), CQ::j(), CQ::k()};
  const std::array<MinkowskiVector, 4> steps{
      MinkowskiVector(h, 0, 0, 0), MinkowskiVector(0, h, 0, 0),
      MinkowskiVector(0, 0, h, 0), MinkowskiVector(0, 0, 0, h)};
  CQ sum;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const CQ derivative = (field(q + steps[mu]) - field(q - steps[mu])) / (2 * h);
    const double sign = (mu == 0 || bar) ? 1.0 : -1.0;
    sum += sign * (units[mu] * derivative);
  }
  return sum;
}

}  // namespace cqdirac::oracle
