#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace poincare {

// Exact scalars. mpq_class keeps every arithmetic result in lowest terms
// with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d reduced. The two-argument mpq_class constructor does not reduce, and
/// GMP arithmetic assumes canonical operands.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b". Throws poincare::Error on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace poincare
