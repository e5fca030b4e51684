#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ftq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "num/den" text; integers are printed without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "n", "-n" and "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace ftq
