#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace thurston {

/// Exact arbitrary-precision fraction. Values are kept canonical
/// (denominator > 0, numerator and denominator coprime).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Always "p/q" form, e.g. "2/1", "-3/2".
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace thurston
