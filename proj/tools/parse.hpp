#pragma once

#include <string>

#include "rdyn/bipoly.hpp"
#include "rdyn/orbifold.hpp"
#include "rdyn/ratmap.hpp"

namespace rdyn::cli {

// Maps in z: numbers, p/q, + - * /, ^k, parentheses, composition "o",
// iteration "^∘k" (or "^ok"), and the aliases T1..T12.
RatMap parse_map(const std::string& text);
// Polynomials in x and y; division only by nonzero constants.
BiPoly parse_curve(const std::string& text);
// "{0:2, inf:3, root(z^2+1):2}"; braces optional.
Orbifold parse_orbifold(const std::string& text);
Place parse_place(const std::string& text);

}  // namespace rdyn::cli
