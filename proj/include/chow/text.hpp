#pragma once

#include <string>
#include <string_view>

#include "chow/factored.hpp"
#include "chow/poly.hpp"

namespace chow {

// Text grammar shared by polynomials and factored elements:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*' | '/' | <juxtaposition>) power)*
//   power  := atom ['^' ['-'] integer]
//   atom   := integer | identifier | '(' expr ')'
//
// Juxtaposition multiplies ("2x", "x y", "(x+1)(x-1)"); "xy" is one
// identifier. A parenthesized sum becomes a single factor in factored
// context (its irreducibility is the caller's assertion).

Poly parse_poly(std::string_view text, const ContextPtr& ctx);
FracElement parse_frac(std::string_view text, const ContextPtr& ctx);
/// Like parse_frac but rejects negative exponents.
FactoredElement parse_factored(std::string_view text, const ContextPtr& ctx);

std::string to_string(const Rat& r);
std::string to_string(const Poly& p);
/// Canonical text, e.g. "rho^2*y^2/z^8", "y/(x^2*w^3*z^6)", "-1".
std::string to_string(const FracElement& f);
std::string to_string(const FactoredElement& f);

}  // namespace chow
