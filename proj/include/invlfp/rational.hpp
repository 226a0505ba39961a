#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace invlfp {

/// Exact arbitrary-precision rational. mpq_class keeps values canonical
/// (lowest terms, positive denominator) after every operation, so equality
/// and sign tests are exact.
using Rational = mpq_class;

using RatVector = std::vector<Rational>;

/// Always build rationals through this helper (or parse_rational): the raw
/// two-argument mpq_class constructor does not canonicalize, and gmpxx
/// arithmetic and comparisons silently misbehave on non-canonical values
/// (e.g. 2/4 or 0/2 compares unequal to an integer it equals).
inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p", or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(const std::string& text);

/// Renders as "p" or "p/q" with positive q; inverse of parse_rational.
std::string to_string(const Rational& q);

std::string to_string(const RatVector& v);

/// Smallest integer s with s*s >= n.
unsigned long ceil_sqrt(unsigned long n);

Rational dot(const RatVector& a, const RatVector& b);

/// Nearest multiple of `grid` (ties toward zero).
Rational round_to_grid(const Rational& value, const Rational& grid);

}  // namespace invlfp
