#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symchow {

/// Exact arbitrary-precision rational; GMP keeps it in canonical form.
using Rational = mpq_class;

/// Renders as "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" in base 10.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// n! as an exact rational.
Rational factorial(unsigned n);

/// q^k by repeated squaring (k is always small here).
Rational rational_pow(const Rational& q, unsigned k);

}  // namespace symchow
