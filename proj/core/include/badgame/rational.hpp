#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace badgame {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "num/den", "num" or a finite decimal such as "0.25".
// The result is canonical (reduced, positive denominator).
Rational parse_rational(std::string_view text);

// Always "num/den", even for integers ("3/1"), so serialized values have
// one shape.
std::string format_rational(const Rational& x);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

std::int64_t to_int64(const Integer& x);
bool fits_int64(const Integer& x);

Integer pow_int(const Integer& base, unsigned long exponent);
Rational pow_rat(const Rational& base, unsigned long exponent);

// Largest r >= 0 with r*r <= x, for x >= 0.
Integer isqrt(const Integer& x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c);

// Floor and ceiling of a/b for b > 0, rounding toward minus / plus infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// Compares a^ea * b^eb with c^ec * d^ed for nonnegative integers.
// Uses 128-bit arithmetic when it cannot overflow and GMP otherwise.
int cmp_power_products(std::uint64_t a, unsigned ea, std::uint64_t b,
                       unsigned eb, std::uint64_t c, unsigned ec,
                       std::uint64_t d, unsigned ed);

}  // namespace badgame
