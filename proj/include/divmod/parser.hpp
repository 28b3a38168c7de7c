#pragma once

#include <string>

#include "divmod/polynomial.hpp"

namespace divmod {

// Parses the textual polynomial syntax:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' number)?
//   base   := number ('/' number)? | identifier | '(' expr ')'
//
// Multiplication is always explicit ('2*x', never '2x').  Whitespace is
// ignored.  Errors throw ParseError carrying the offending offset.
Polynomial parse_polynomial(const std::string& text, RingPtr ring);

}  // namespace divmod
