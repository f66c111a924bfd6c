#pragma once

#include <string>

#include "rsl/symfunc.hpp"

namespace rsl {

// Parse a symmetric-function expression like
//   "e[2]*s[2,1] + (q+t)*h[3] - 2*p[1]^2"
// Generators: e[k], h[k], p[k], s[a,b,...], m[...], H[...] (modified
// Macdonald). Coefficients are polynomials in q and t with integer
// constants; +, -, *, ^ and parentheses are supported.
SymFunc parse_symfunc(const std::string& text, SymEngine& engine);

}  // namespace rsl
