#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lazard/errors.hpp"

namespace lazard {

// Exact arithmetic base types. mpq_class values are kept canonical (lowest
// terms, positive denominator, 0 represented as 0/1) by gmpxx itself.
using Integer = mpz_class;
using Rational = mpq_class;

inline int signOf(const Rational& q) { return sgn(q); }
inline int signOf(const Integer& z) { return sgn(z); }

inline Rational absOf(const Rational& q) { return abs(q); }

inline Integer floorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rational rationalPow(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

inline Integer integerPow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// gcd on rationals: gcd of numerators over lcm of denominators. Nonnegative;
/// gcd(0,0) = 0. Used for numeric content extraction.
inline Rational rationalGcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num = gcd(Integer(a.get_num()), Integer(b.get_num()));
  Integer den = lcm(Integer(a.get_den()), Integer(b.get_den()));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string toString(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q". Throws input_error on malformed text or a zero
/// denominator.
inline Rational parseRational(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw input_error("malformed rational literal '" + text + "'");
  checkInput(mpz_sgn(mpq_denref(q.get_mpq_t())) != 0, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace lazard
