#pragma once

#include <string_view>

#include "steklov/trig_polynomial.hpp"

namespace steklov {

// Parses trigonometric polynomials such as "1 + 0.3*cos(1*t) - 0.1*sin(3*t)".
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+' | '-') factor | number | trig | '(' expr ')'
//   trig    := ('cos' | 'sin') '(' [integer ['*']] 't' ')'
//
// Products are expanded exactly. Throws ParseError with the offending offset.
TrigPolynomial parseExpression(std::string_view text);

}  // namespace steklov
