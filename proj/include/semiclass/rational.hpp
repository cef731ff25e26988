// Exact rational scalars and their canonical "p/q" text form.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace semiclass {

// All arithmetic in this project is exact. Rationals are kept reduced with a
// positive denominator (GMP canonical form); equality is true equality.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return q == 0; }

// Builds num/den in lowest terms (mpq_class's two-argument constructor does
// not canonicalize on its own).
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical serialization: "p" if the denominator is 1, else "p/q" with q > 0
// and gcd(|p|, q) = 1.
std::string rat_to_string(const Rational& q);

// Thrown by the text parsers in this project. `pos` is a 0-based offset into
// the offending string; messages embed a 1-based column for humans.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t position, const std::string& what_arg)
      : std::runtime_error(what_arg), pos(position) {}
};

// Accepts an optional sign, digits, and an optional "/digits" part with a
// nonzero denominator. No whitespace, no exponents, no decimals.
Rational rat_from_string(const std::string& text);

}  // namespace semiclass
