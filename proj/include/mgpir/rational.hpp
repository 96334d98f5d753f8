#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mgpir {

/// Exact rational arithmetic. Every bound, rate and audit statistic in this
/// library stays in Q; nothing is ever rounded to floating point.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
  mpz_class n = 1;
  n <<= static_cast<unsigned long>(e >= 0 ? e : -e);
  if (e >= 0) return Rational(n);
  Rational q(1, n);
  q.canonicalize();
  return q;
}

/// Canonical rendering: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace mgpir
