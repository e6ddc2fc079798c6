#pragma once

#include <string_view>

#include "lgkit/half_laurent.hpp"
#include "lgkit/laurent.hpp"
#include "lgkit/rational.hpp"

namespace lgkit {

// Expressions over + - * / ^ and parentheses. Exponents are signed integers.
// Variables: t (or tau) and q. Throws ParseError on malformed input.
RationalFn parse_rational(std::string_view text);

// As parse_rational, but the result must be a Laurent polynomial.
Laurent2 parse_laurent(std::string_view text);

// Laurent polynomial in s; t is accepted as s^2.
HalfLaurent parse_half_laurent(std::string_view text);

}  // namespace lgkit
