#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flopalg {

/// Exact rational scalar. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Parses "7", "-3", "3/4" or "-3/4". Throws flopalg::Error on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace flopalg
