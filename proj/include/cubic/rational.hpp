#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubic {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator. GMP canonicalizes after every arithmetic operation; the only
// entry points that need care are string parsing and raw construction.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace cubic
