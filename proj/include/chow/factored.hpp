#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chow/poly.hpp"

namespace chow {

/// One irreducible factor with its multiplicity.
struct Factor {
  Poly poly;
  int exponent;

  bool operator==(const Factor& other) const {
    return exponent == other.exponent && poly == other.poly;
  }
};

/// Irreducibility is certified for degree-one polynomials (this includes
/// single variables); anything else is taken on the caller's word.
bool is_certified_irreducible(const Poly& p);

/// Element of the fraction field K, stored as unit * prod factor^exponent.
///
/// Invariants: unit is a nonzero rational; each factor is nonconstant,
/// primitive over Z with positive leading coefficient, not a monomial of
/// degree > 1; factors are pairwise distinct (hence non-associate); no
/// exponent is zero; the list is sorted by canonical_compare.
class FracElement {
 public:
  /// The element 1.
  explicit FracElement(ContextPtr ctx);

  /// Builds the canonical form from an arbitrary presentation: constants are
  /// folded into the unit, monomial content is split into variable factors,
  /// associates are merged and cancelled.
  static FracElement from_factors(ContextPtr ctx, const Rat& unit,
                                  const std::vector<std::pair<Poly, int>>& factors);
  /// Treats p as a single factor after extracting its constant and monomial
  /// content. Throws DomainError for p = 0.
  static FracElement from_poly(const Poly& p);
  static FracElement variable(ContextPtr ctx, std::size_t index, int exponent = 1);
  static FracElement constant(ContextPtr ctx, const Rat& c);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Rat& unit() const noexcept { return unit_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  /// Exponent of the given canonical generator (0 when absent).
  int exponent_of(const Poly& generator) const;
  /// True when every factor is a single variable.
  bool is_monomial() const;
  bool is_unit() const noexcept { return factors_.empty(); }
  bool is_integral() const;

  FracElement operator*(const FracElement& other) const;
  FracElement operator/(const FracElement& other) const;
  FracElement pow(int e) const;
  FracElement inverse() const { return pow(-1); }

  /// Substitutes x_var = value factorwise; throws DomainError if some factor
  /// becomes identically zero.
  FracElement substitute(std::size_t var, const Rat& value) const;

  bool operator==(const FracElement& other) const;
  bool operator!=(const FracElement& other) const { return !(*this == other); }

 private:
  FracElement(ContextPtr ctx, Rat unit, std::vector<Factor> factors)
      : ctx_(std::move(ctx)), unit_(std::move(unit)), factors_(std::move(factors)) {}

  ContextPtr ctx_;
  Rat unit_;
  std::vector<Factor> factors_;
};

/// A nonzero ring element in factored form (all exponents positive).
class FactoredElement {
 public:
  explicit FactoredElement(ContextPtr ctx) : frac_(std::move(ctx)) {}
  /// Throws DomainError if f has a negative exponent.
  explicit FactoredElement(FracElement f);

  static FactoredElement from_poly(const Poly& p) {
    return FactoredElement(FracElement::from_poly(p));
  }
  static FactoredElement variable(ContextPtr ctx, std::size_t index, int exponent = 1) {
    return FactoredElement(FracElement::variable(std::move(ctx), index, exponent));
  }

  const ContextPtr& context() const noexcept { return frac_.context(); }
  const Rat& unit() const noexcept { return frac_.unit(); }
  const std::vector<Factor>& factors() const noexcept { return frac_.factors(); }
  const FracElement& as_fraction() const noexcept { return frac_; }
  int exponent_of(const Poly& generator) const { return frac_.exponent_of(generator); }
  bool is_unit() const noexcept { return frac_.is_unit(); }
  bool is_monomial() const { return frac_.is_monomial(); }

  FactoredElement operator*(const FactoredElement& other) const {
    return FactoredElement(frac_ * other.frac_);
  }
  FactoredElement pow(unsigned e) const {
    return FactoredElement(frac_.pow(static_cast<int>(e)));
  }

  bool operator==(const FactoredElement& other) const { return frac_ == other.frac_; }
  bool operator!=(const FactoredElement& other) const { return !(*this == other); }

 private:
  FracElement frac_;
};

/// unit * prod factor^exponent as a polynomial.
Poly expand(const FactoredElement& e);

/// Canonical form of f. Values are canonical on construction, so this is the
/// identity on well-formed input; it re-validates and re-normalizes.
FracElement reduce_fraction(const FracElement& f);

/// num / den in lowest terms.
FracElement ratio(const FactoredElement& num, const FactoredElement& den);

/// Positive-exponent part (carrying the unit) and negative-exponent part.
FactoredElement numerator(const FracElement& f);
FactoredElement denominator(const FracElement& f);

}  // namespace chow
