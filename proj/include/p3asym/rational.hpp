#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace p3asym {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p", "p/q" or a plain decimal ("-0.25") into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" rendering.
std::string to_string(const Rational& q);

/// n! as a big integer.
Integer factorial(unsigned long n);

/// q^e for e >= 0.
Rational pow_rational(const Rational& base, unsigned long e);

/// Real cube root of q when it is rational, i.e. when num and den are
/// (sign-adjusted) perfect cubes. Returns nullopt otherwise.
std::optional<Rational> rational_cbrt(const Rational& q);

/// ln|q| computed through mpz_get_d_2exp, safe far beyond double range.
/// q must be nonzero.
double log_abs(const Rational& q);

/// Exact sign: -1, 0, +1.
inline int sign(const Rational& q) { return sgn(q); }

}  // namespace p3asym
