#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace plabic {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q" and finite decimals such as "-6.96"; the result is canonical.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Throws std::overflow_error when z does not fit.
std::int64_t to_int64(const Integer& z);

inline Integer to_integer(std::int64_t v) {
    return Integer(std::to_string(v));
}

} // namespace plabic
