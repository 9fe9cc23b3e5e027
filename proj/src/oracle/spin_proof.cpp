#include "cqdirac/oracle/spin_proof.hpp"

#include <cmath>

namespace cqdirac::oracle {

std::optional<CQ> constructive_spin_direction(double a, double c, double d, const CQ& m,
                                              const CQ& m_prime) {
  if (d == 0.0) return std::nullopt;
  if (c == 0.0) return m_prime;
  const CQ anti = m * m_prime + m_prime * m;
  if (anti.max_abs() > 1e-12) return std::nullopt;
  return (a * CQ::one() + c * m) * m_prime / d;
}

}  // namespace cqdirac::oracle
