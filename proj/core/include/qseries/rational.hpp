#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical form: lowest terms, positive denominator. Printed "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Floor and ceiling of an exact rational, as machine integers.
// Throws std::overflow_error when the result does not fit.
std::int64_t floor_int(const Rational& value);
std::int64_t ceil_int(const Rational& value);

std::int64_t to_int64(const Integer& value);

std::int64_t gcd_int(std::int64_t a, std::int64_t b);
std::int64_t lcm_int(std::int64_t a, std::int64_t b);

} // namespace qseries
