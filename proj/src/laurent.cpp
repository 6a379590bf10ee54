#include "artin/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exp) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = exp;
    p.coeffs_.push_back(c);
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && lo_ == 0 && coeffs_[0] == 1;
}

long LaurentPoly::lo() const { return lo_; }
long LaurentPoly::hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }

Rational LaurentPoly::coeff(long exp) const {
  if (is_zero() || exp < lo_ || exp > hi()) return Rational(0);
  return coeffs_[static_cast<size_t>(exp - lo_)];
}

Rational LaurentPoly::leading_coeff() const { return coeffs_.back(); }

void LaurentPoly::normalize() {
  size_t first = 0, last = coeffs_.size();
  while (last > first && coeffs_[last - 1] == 0) --last;
  while (first < last && coeffs_[first] == 0) ++first;
  if (first == last) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  if (first > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
  coeffs_.resize(last - first);
  lo_ += static_cast<long>(first);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long nlo = std::min(lo_, o.lo_);
  long nhi = std::max(hi(), o.hi());
  std::vector<Rational> out(static_cast<size_t>(nhi - nlo + 1), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<size_t>(lo_ - nlo) + i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<size_t>(o.lo_ - nlo) + i] += o.coeffs_[i];
  lo_ = nlo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long exp) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += exp;
  return r;
}

void LaurentPoly::poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot,
                              LaurentPoly& rem) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  quot = LaurentPoly();
  rem = a;
  const Rational blead = b.leading_coeff();
  while (!rem.is_zero() && rem.hi() >= b.hi()) {
    Rational c = rem.leading_coeff() / blead;
    long e = rem.hi() - b.hi();
    LaurentPoly t = monomial(c, e);
    quot += t;
    rem -= t * b;
  }
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot,
                         LaurentPoly& rem) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  if (a.is_zero()) {
    quot = LaurentPoly();
    rem = LaurentPoly();
    return;
  }
  // shift both to honest polynomials with nonzero constant term
  LaurentPoly A = a.shifted(-a.lo());
  LaurentPoly B = b.shifted(-b.lo());
  LaurentPoly s, r;
  poly_divmod(A, B, s, r);
  quot = s.shifted(a.lo() - b.lo());
  rem = r.shifted(a.lo());
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly quot, rem;
  divmod(a, b, quot, rem);
  if (!rem.is_zero())
    throw InexactDivision("inexact division: " + a.str() + " by " + b.str());
  return quot;
}

bool LaurentPoly::divides(const LaurentPoly& a) const {
  if (is_zero()) return a.is_zero();
  LaurentPoly quot, rem;
  divmod(a, *this, quot, rem);
  return rem.is_zero();
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return Rational(0);
  // Horner on the polynomial part, then the q^lo factor.
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  long e = lo_;
  if (e != 0 && x == 0) throw std::domain_error("evaluating q^negative at 0");
  Rational p(1);
  long ae = e < 0 ? -e : e;
  for (long i = 0; i < ae; ++i) p *= x;
  return e >= 0 ? Rational(acc * p) : Rational(acc / p);
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = hi(); e >= lo(); --e) {
    Rational c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (e == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace artin
