#ifndef ARTIN_LAURENT_HPP
#define ARTIN_LAURENT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laurent polynomial over Q: an element of R = Q[q^{+-1}].
// Stored densely as coefficients of q^(lo), q^(lo+1), ... with the first and
// last stored coefficient nonzero; the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  explicit LaurentPoly(long constant);

  static LaurentPoly monomial(const Rational& c, long exp);
  static LaurentPoly q_power(long exp) { return monomial(Rational(1), exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // unit of R: nonzero rational times a power of q
  bool is_unit() const { return coeffs_.size() == 1; }

  long lo() const;  // lowest exponent; requires nonzero
  long hi() const;  // highest exponent; requires nonzero
  long span() const { return is_zero() ? 0 : hi() - lo(); }
  Rational coeff(long exp) const;
  Rational leading_coeff() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(long exp) const;  // multiply by q^exp

  // Division in Q[q] after factoring out q-powers: a = quot*b + rem with the
  // q-shift absorbed into quot, rem = r*q^(a.lo), deg r < deg b. b != 0.
  static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot,
                     LaurentPoly& rem);
  // Throws InexactDivision when b does not divide a in R.
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  bool divides(const LaurentPoly& a) const;  // *this | a in R

  // Plain polynomial long division by leading terms (quot stays in Q[q] when
  // both operands do). Used by the SNF over Q[q].
  static void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot,
                          LaurentPoly& rem);

  Rational evaluate(const Rational& x) const;  // x != 0 whenever lo() < 0

  bool has_integer_coeffs() const;
  bool is_monic() const { return !is_zero() && leading_coeff() == 1; }

  // "a*q^k + ..." with exponents descending; exact rationals.
  std::string str() const;

 private:
  long lo_ = 0;
  std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of q^(lo_+i)

  void normalize();
  friend struct LaurentPolyTestAccess;
};

}  // namespace artin

#endif
