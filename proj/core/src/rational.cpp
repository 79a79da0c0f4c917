#include "masslin/rational.hpp"

#include <cctype>
#include <ostream>

namespace masslin {

void Rational::init(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned long e) const {
  Rational acc(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&]() -> ParseError {
    return ParseError("rational: malformed value \"" + text + "\"");
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (n == 0) throw bad();
  std::size_t start = 0;
  if (text[0] == '+' || text[0] == '-') start = 1;
  i = start;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start) throw bad();
  // mpz rejects a leading '+', so pass digits only and restore the sign.
  Integer num(text.substr(start, i - start));
  if (text[0] == '-') num = -num;
  if (i == n) return Rational(num);
  if (text[i] != '/') throw bad();
  const std::size_t dstart = ++i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == dstart || i != n) throw bad();
  Integer den(text.substr(dstart));
  if (sgn(den) == 0) throw bad();
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace masslin
