#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chow/poly.hpp"

namespace chow {

// Helpers for polynomials that involve a single variable x_var (other
// variables of the context are absent). Coefficients live in Q.

/// Quotient and remainder of a by b in Q[x_var].
std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b, std::size_t var);

/// Monic gcd in Q[x_var]; gcd(0, 0) = 0.
Poly gcd_univariate(const Poly& a, const Poly& b, std::size_t var);

/// Multiplicity of the root `point`, or -1 for the zero polynomial.
int order_at(const Poly& p, std::size_t var, const Rat& point);

struct RationalRoot {
  Rat value;
  int multiplicity;
};

/// p = cofactor * prod (x_var - root)^multiplicity with cofactor free of
/// rational roots. Roots are listed in increasing order. p must be nonzero.
struct RootSplit {
  std::vector<RationalRoot> roots;
  Poly cofactor;
};
RootSplit rational_roots(const Poly& p, std::size_t var);

/// Pseudo-remainder of a by b viewed as polynomials in x_var over the
/// remaining variables: lc(b)^(deg a - deg b + 1) * a = q * b + r.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

/// Resultant eliminating x_var, computed with the subresultant
/// pseudo-remainder sequence. Sign is normalized so the leading coefficient
/// (grlex) is positive. Convention when one input has degree 0 in x_var:
/// res(c, g) = c^deg(g). Throws DomainError for zero input or when both
/// inputs are constant in x_var.
Poly resultant(const Poly& f, const Poly& g, std::size_t var);

}  // namespace chow
