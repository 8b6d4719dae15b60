#pragma once

#include <string>

#include "lepoly/bivariate_poly.hpp"

namespace lepoly {

/// Parses an arithmetic expression in x, y, i, integer literals, rationals
/// p/q, the operators + - * / ^ and parentheses.  Division is only allowed
/// by nonzero constants; exponents are nonnegative integer literals.
/// Throws ParseError with the offending position.
BivariatePoly poly_parse(const std::string& text);

}  // namespace lepoly
