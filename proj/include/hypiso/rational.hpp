#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hypiso {

/// Exact rational scalar. mpq_class keeps values canonical as long as every
/// construction from raw numerator/denominator goes through make_rational or
/// parse_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and finite decimals such as "-1.25" (read exactly).
/// Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> try_parse_rational(std::string_view text);

/// Throws ParseError (line/column 0) on malformed text.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

int sign(const Rational& value);

/// Exact square root when value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Rational lower/upper bounds on sqrt(value) within 2^-bits; value >= 0.
Rational sqrt_lower(const Rational& value, unsigned bits = 64);
Rational sqrt_upper(const Rational& value, unsigned bits = 64);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace hypiso
