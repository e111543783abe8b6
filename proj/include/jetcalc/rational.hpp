#pragma once

#include <gmpxx.h>

#include <string>

namespace jetcalc {

// Exact scalar field for every computation in the library. mpq_class keeps
// the canonical form gcd(|num|, den) = 1, den > 0 as long as values are
// built through ratio() or arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string toString(const Rational& r) { return r.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace jetcalc
