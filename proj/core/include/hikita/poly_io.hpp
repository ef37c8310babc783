#pragma once

#include <string>
#include <string_view>

#include "hikita/polynomial.hpp"

namespace hikita {

// Grammar: terms joined by '+'/'-'; a term is '*'-separated factors, each a
// coefficient ("a" or "a/b") or a variable with optional "^exp".
// Whitespace is ignored. Printing lists terms in decreasing order and omits
// unit coefficients, e.g. "3/2*x1^2*y1 - x1 + 4".
Polynomial parse_polynomial(std::string_view text, const Ring& ring);
std::string format_polynomial(const Polynomial& p);

}  // namespace hikita
