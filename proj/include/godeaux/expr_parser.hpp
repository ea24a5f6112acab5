#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "godeaux/mpoly.hpp"
#include "godeaux/number_field.hpp"

namespace godeaux {

/// Parses a polynomial with coefficients in K over the listed variables.
///
/// Grammar: sums and differences of products; '*' or juxtaposition ("3X",
/// "2(u + 1)") multiplies, '/' divides by a nonzero constant, '^' takes a
/// non-negative integer power. Numbers are non-negative integers; rationals
/// are written with '/'. The identifier `u` is the field generator unless it is one
/// of the variables. Whitespace is ignored.
///
/// Throws ParseError (with the byte offset) on malformed input and
/// UnknownVariable for identifiers outside the list.
Polynomial<NumberFieldElement> parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace godeaux
