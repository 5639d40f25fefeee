#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symcone {

/// Exact rational scalar used for every coefficient and pairing.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline int sign(const Rational& value) { return sgn(value); }

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

}  // namespace symcone
