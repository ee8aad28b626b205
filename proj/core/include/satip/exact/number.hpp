#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace satip::exact {

// Arbitrary-precision integers and rationals. mpq_class values produced by
// the helpers below are always canonicalized (den > 0, gcd(num, den) = 1).
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

bool is_integer(const Rational& q);
Integer abs(const Integer& a);

// Throws satip::Error(Overflow) if the value does not fit.
std::int64_t to_int64(const Integer& value);

// Scales a rational vector by the lcm of its denominators, yielding integers.
IntVector clear_denominators(std::span<const Rational> values);

// Vector helpers used by several modules.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace satip::exact
