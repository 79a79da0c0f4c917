#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "masslin/errors.hpp"

namespace masslin {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; equality is canonical-form equality. Serializes as
/// "p/q", or "p" when the denominator is 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_((signed long)v) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den) { init(num, den); }
  Rational(long num, long den) { init(Integer(num), Integer(den)); }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// Nonnegative integer power.
  Rational pow(unsigned long e) const;

  /// Approximate value; for human-facing output only.
  double to_double() const { return q_.get_d(); }

  /// Canonical "p/q" (or "p") form.
  std::string str() const;

  /// Strict parse of the "p/q" grammar: optional sign, digits, optional
  /// "/digits" with nonzero denominator. Throws ParseError otherwise.
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  void init(const Integer& num, const Integer& den);

  mpq_class q_;
};

/// n! as an arbitrary-precision integer.
Integer factorial(unsigned n);

/// Binomial coefficient C(n, k).
Integer binomial(unsigned n, unsigned k);

}  // namespace masslin
