#ifndef SERENDIPITY_RATIONAL_HPP
#define SERENDIPITY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace serendipity {

// All construction and verification runs in exact rational arithmetic;
// GMP provides the representation. Conversion to double happens only at
// evaluation/export boundaries.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (decimal integers). Rejects anything else,
/// in particular decimal-point floats, empty strings and zero
/// denominators.
Rational rational_from_string(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace serendipity

#endif
