#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/rational.hpp"

namespace zigzag {

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact weights w solving the Vandermonde moment system
///   sum_q w_q * x_q^p = d! * delta_{p,d},   p = 0 .. m-1,
/// i.e. the d-th derivative weights on the given nodes. Solved in rational
/// arithmetic through the node polynomial: w_q = d! [x^d] L_q(x) where L_q is
/// the Lagrange cardinal polynomial of node q. Duplicate nodes make the
/// system singular and are rejected.
inline std::vector<Rational> vandermonde_weights(const std::vector<Rational>& offsets,
                                                 int derivative) {
  const std::size_t m = offsets.size();
  if (m == 0) throw std::invalid_argument("vandermonde_weights: empty node set");
  if (derivative < 0 || static_cast<std::size_t>(derivative) >= m)
    throw std::invalid_argument("vandermonde_weights: need derivative < node count");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i + 1; k < m; ++k)
      if (offsets[i] == offsets[k])
        throw SingularSystem("vandermonde_weights: duplicate node " + offsets[i].to_string());

  // P(x) = prod_q (x - x_q), coefficients low to high.
  std::vector<Rational> poly(m + 1);
  poly[0] = Rational(1);
  std::size_t deg = 0;
  for (std::size_t q = 0; q < m; ++q) {
    poly[deg + 1] = Rational(1);
    for (std::size_t k = deg + 1; k-- > 1;) poly[k] = poly[k - 1] - offsets[q] * poly[k];
    poly[0] = -offsets[q] * poly[0];
    ++deg;
  }

  const Rational dfac(factorial(static_cast<unsigned>(derivative)));
  std::vector<Rational> weights(m);
  std::vector<Rational> quot(m);
  for (std::size_t q = 0; q < m; ++q) {
    // Synthetic division: N_q(x) = P(x)/(x - x_q), coefficients low to high.
    Rational carry = poly[m];
    for (std::size_t k = m; k-- > 0;) {
      quot[k] = carry;
      carry = poly[k] + offsets[q] * carry;
    }
    // N_q(x_q) by Horner.
    Rational denom;
    for (std::size_t k = m; k-- > 0;) denom = denom * offsets[q] + quot[k];
    if (denom.is_zero()) throw SingularSystem("vandermonde_weights: degenerate node set");
    weights[q] = dfac * quot[static_cast<std::size_t>(derivative)] / denom;
  }
  return weights;
}

}  // namespace zigzag
