#pragma once

#include "flopalg/freealg/ncpoly.hpp"

#include <string_view>

namespace flopalg::freealg {

/// Parses polynomial text over `alphabet`.
///
/// Grammar: sums and differences of products; products by `*` or by
/// juxtaposition; `^` with a nonnegative integer exponent; integer or
/// rational (`3/4`) literals; parentheses. Generator names are matched
/// longest-first, so `xy` reads as x*y when x and y are generators. A digit
/// directly after a generator name is rejected (write `y^2`, not `y2`).
///
/// Throws ParseError whose line is `line` and whose column is offset by
/// `column_offset`.
NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet, std::size_t line = 1,
                    std::size_t column_offset = 0);

}  // namespace flopalg::freealg
