#pragma once

#include <string_view>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' INT)?
///   base   := INT | VAR | '(' expr ')'
///
/// Blanks between tokens are ignored. Integer literals are reduced mod p.
/// Throws SyntaxError (with byte offset), UnknownVariable or OverflowError.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Comma-separated list of expressions. An empty or all-blank string yields no polynomials.
std::vector<Polynomial> parse_poly_list(std::string_view text, const RingPtr& ring);

}  // namespace charp
