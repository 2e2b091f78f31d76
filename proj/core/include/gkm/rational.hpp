#ifndef GKM_RATIONAL_HPP
#define GKM_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gkm {

// Exact arithmetic throughout: arbitrary-precision rationals (GMP) with
// canonical representation (reduced, positive denominator). No floating
// point anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(n, d) does not reduce; this does.
inline Rational make_rational(long numerator, long denominator = 1) {
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "a" or "a/b" in base 10.
inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  q.canonicalize();
  return q;
}

}  // namespace gkm

#endif  // GKM_RATIONAL_HPP
