#pragma once

#include <string>

#include "symcone/rational.hpp"

namespace symcone {

/// Exact real number (p + q*sqrt(d)) / den with rational p, q, d and den > 0, d >= 0.
///
/// Comparisons against rationals go through sign analysis and squaring only.
struct QuadraticRoot {
  Rational p;
  Rational q;
  Rational d;
  Rational den;

  /// Throws DomainError if d < 0 or den == 0; normalizes den to be positive.
  QuadraticRoot(Rational p, Rational q, Rational d, Rational den);

  /// Sign of (this - r).
  int compare(const Rational& r) const;

  /// Largest k/denominator strictly below the root.
  Rational rational_below(const Integer& denominator) const;
  /// Smallest k/denominator strictly above the root.
  Rational rational_above(const Integer& denominator) const;

  std::string to_string() const;
};

/// Sign of a + b*sqrt(d), d >= 0.
int sign_of_surd(const Rational& a, const Rational& b, const Rational& d);

}  // namespace symcone
