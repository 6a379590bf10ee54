#ifndef ARTIN_CYCLOTOMIC_HPP
#define ARTIN_CYCLOTOMIC_HPP

#include <map>
#include <stdexcept>

#include "artin/laurent.hpp"

namespace artin {

struct NonCyclotomicFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// d-th cyclotomic polynomial phi_d, d >= 1, computed from the recurrence
// q^d - 1 = prod_{e | d} phi_e by exact division. Results are cached.
const LaurentPoly& cyclotomic(int d);

// q-analogue [k]_q = (q^k - 1)/(q - 1) = 1 + q + ... + q^(k-1).
LaurentPoly q_integer(int k);

// [k]_q! = [1]_q [2]_q ... [k]_q.
LaurentPoly q_factorial(int k);

// A nonzero element of R written as unit * prod_d phi_d^exponents[d].
struct CyclotomicProfile {
  std::map<int, int> exponents;  // d >= 2 -> exponent >= 1
  Rational unit_coeff = Rational(1);
  long unit_qpow = 0;

  int exponent(int d) const {
    auto it = exponents.find(d);
    return it == exponents.end() ? 0 : it->second;
  }
  LaurentPoly to_poly() const;
  bool operator==(const CyclotomicProfile&) const = default;
};

// Trial division by phi_d for 2 <= d <= d_max (default: the degree span of p).
// Throws NonCyclotomicFactor if the residual is not a unit of R.
CyclotomicProfile factor_cyclotomic(const LaurentPoly& p, int d_max = -1);

}  // namespace artin

#endif
