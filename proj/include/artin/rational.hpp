#ifndef ARTIN_RATIONAL_HPP
#define ARTIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace artin {

// Exact arithmetic over Q. GMP's canonical form (lowest terms, positive
// denominator) is exactly the invariant the rest of the engine relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Locale-independent rendering: "p" or "p/q".
inline std::string to_string(const Rational& r) {
  return r.get_str();
}

inline std::string to_string(const Integer& z) {
  return z.get_str();
}

}  // namespace artin

#endif
