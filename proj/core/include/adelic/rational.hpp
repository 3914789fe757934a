// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace adelic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "a/b", or a finite decimal such as "-0.25" into canonical form.
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Natural logarithm of |q| for q != 0, accurate for operands far outside the
/// double range.
double log_abs(const Rational &q);
double log_abs(const Integer &z);

double to_double(const Rational &q);

Rational make_rational(long num, long den = 1);

/// Deterministic Miller-Rabin over 64-bit integers.
bool is_prime(std::uint64_t n);

/// p-adic valuation of a nonzero integer / rational; callers handle zero.
std::int64_t valuation_nonzero(const Integer &z, std::uint64_t p);
std::int64_t valuation_nonzero(const Rational &q, std::uint64_t p);

/// Sum of base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

/// Floor/ceil for rationals.
Integer floor(const Rational &q);
Integer ceil(const Rational &q);

} // namespace adelic
