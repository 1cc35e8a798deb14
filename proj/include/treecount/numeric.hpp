// Exact arithmetic substrate: arbitrary-precision integers and rationals.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace treecount {

using Integer = mpz_class;
using Natural = mpz_class;  // non-negative by convention
using Rational = mpq_class;

// num/den reduced to lowest terms, denominator positive, zero stored as 0/1.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// "p/q" in lowest terms; plain "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace treecount
