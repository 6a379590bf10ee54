#include "artin/cyclotomic.hpp"

#include <vector>

namespace artin {

namespace {

LaurentPoly q_power_minus_one(int d) {
  LaurentPoly p = LaurentPoly::q_power(d);
  p -= LaurentPoly(1);
  return p;
}

}  // namespace

const LaurentPoly& cyclotomic(int d) {
  if (d < 1) throw std::domain_error("cyclotomic: d must be >= 1");
  static std::vector<LaurentPoly> cache{LaurentPoly()};  // index 0 unused
  if (d < static_cast<int>(cache.size()) && !cache[static_cast<size_t>(d)].is_zero())
    return cache[static_cast<size_t>(d)];
  if (d >= static_cast<int>(cache.size())) cache.resize(static_cast<size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    if (!cache[static_cast<size_t>(k)].is_zero()) continue;
    LaurentPoly num = q_power_minus_one(k);
    for (int e = 1; e < k; ++e)
      if (k % e == 0) num = LaurentPoly::exact_div(num, cache[static_cast<size_t>(e)]);
    cache[static_cast<size_t>(k)] = num;
  }
  return cache[static_cast<size_t>(d)];
}

LaurentPoly q_integer(int k) {
  if (k < 1) throw std::domain_error("q_integer: k must be >= 1");
  LaurentPoly p;
  for (int i = 0; i < k; ++i) p += LaurentPoly::q_power(i);
  return p;
}

LaurentPoly q_factorial(int k) {
  LaurentPoly p(1);
  for (int i = 2; i <= k; ++i) p *= q_integer(i);
  return p;
}

LaurentPoly CyclotomicProfile::to_poly() const {
  LaurentPoly p = LaurentPoly::monomial(unit_coeff, unit_qpow);
  for (const auto& [d, e] : exponents)
    for (int i = 0; i < e; ++i) p *= cyclotomic(d);
  return p;
}

namespace {

long euler_phi(long d) {
  long r = d;
  for (long p = 2; p * p <= d; ++p)
    if (d % p == 0) {
      r -= r / p;
      while (d % p == 0) d /= p;
    }
  if (d > 1) r -= r / d;
  return r;
}

}  // namespace

CyclotomicProfile factor_cyclotomic(const LaurentPoly& p, int d_max) {
  if (p.is_zero()) throw std::domain_error("factor_cyclotomic: zero polynomial");
  // phi_d has degree euler_phi(d) >= sqrt(d/2), so divisors of p satisfy
  // d <= 2*span^2; an explicit d_max overrides this bound
  if (d_max < 0) d_max = static_cast<int>(2 * p.span() * p.span() + 2);
  CyclotomicProfile out;
  LaurentPoly rest = p;
  for (int d = 2; d <= d_max && !rest.is_unit(); ++d) {
    if (euler_phi(d) > rest.span()) continue;
    const LaurentPoly& phi = cyclotomic(d);
    for (;;) {
      LaurentPoly quot, rem;
      LaurentPoly::divmod(rest, phi, quot, rem);
      if (!rem.is_zero()) break;
      rest = quot;
      ++out.exponents[d];
    }
  }
  if (!rest.is_unit())
    throw NonCyclotomicFactor("non-unit residual " + rest.str() + " (d_max=" +
                              std::to_string(d_max) + ")");
  out.unit_coeff = rest.leading_coeff();
  out.unit_qpow = rest.lo();
  return out;
}

}  // namespace artin
