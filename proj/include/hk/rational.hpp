#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hk {

// Exact rational scalar. GMP keeps every result of its arithmetic operators in
// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or an integer literal. Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the value is an integer.
std::string to_string(const Rational& x);

// Always "p/q", with q = 1 for integers.
std::string to_fraction_string(const Rational& x);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Converts an integral value to long. Throws on non-integers or overflow.
long to_long(const Rational& x);

} // namespace hk
