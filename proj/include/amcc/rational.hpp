#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace amcc {

// Exact rational backed by GMP. Results of arithmetic are always canonical;
// use make_rational() when building from a numerator/denominator pair.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "a", "a/b", "-a/b" with optional surrounding whitespace.
// Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// "a/b" with the denominator always present ("1/1", "0/1").
std::string to_fraction_string(const Rational& r);

// Canonical GMP form: "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

} // namespace amcc
