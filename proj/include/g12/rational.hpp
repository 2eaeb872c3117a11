// Exact rational scalars on top of GMP. mpq_class keeps values in lowest
// terms with positive denominator, which is exactly the invariant we need.
#pragma once

#include <gmpxx.h>

#include <string>

namespace g12 {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p"; rejects anything else (including q = 0).
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Integer value of q; q must be an integer fitting in long.
long to_long(const Rational& q);

// Representative of q mod 1 in [0, 1).
Rational mod1(const Rational& q);

inline long lcm_long(long a, long b) {
  Integer l = lcm(Integer(a), Integer(b));
  return l.get_si();
}

}  // namespace g12
