#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace milnor {

// Exact rational coefficients. mpq_class keeps values canonical (lowest
// terms, positive denominator, 0 == 0/1) as long as every entry point
// canonicalizes, which rational_from_string enforces.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" with q > 0. Throws std::invalid_argument on malformed
// input or zero denominator.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace milnor
