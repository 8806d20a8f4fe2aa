#pragma once

// Exact scalar types shared by every module: GMP integers and rationals,
// plus the few conversions the rest of the library needs.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qsi {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q"; the result is canonical. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

/// Nearest integer, ties toward +infinity.
Integer round_of(const Rational& value);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& value);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

/// Denominator of a canonical rational as int64.
std::int64_t denominator64(const Rational& value);

}  // namespace qsi
