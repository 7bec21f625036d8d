#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chow/factored.hpp"
#include "chow/poly.hpp"

namespace chow {

/// Length of a module: a nonnegative integer, or infinite when the module
/// does not have finite length.
class Length {
 public:
  static Length finite(std::int64_t n);
  static Length infinite() { return Length(); }

  bool is_finite() const noexcept { return finite_; }
  /// Throws DomainError when infinite.
  std::int64_t value() const;

  Length operator+(const Length& other) const;
  bool operator==(const Length& other) const = default;

 private:
  Length() = default;
  bool finite_ = false;
  std::int64_t n_ = 0;
};

/// "3" or "inf".
std::string to_string(const Length& l);

/// The prime generated by a nonempty set of variables.
class CoordinatePrime {
 public:
  /// Sorts and deduplicates; throws DomainError if empty or out of range.
  CoordinatePrime(ContextPtr ctx, std::vector<std::size_t> vars);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t height() const noexcept { return vars_.size(); }
  std::size_t dimension() const noexcept { return ctx_->size() - vars_.size(); }
  bool contains_var(std::size_t v) const;
  /// Is the element in this prime? (some factor vanishes when the prime's
  /// variables are set to zero)
  bool contains(const FactoredElement& e) const;

  bool operator==(const CoordinatePrime& other) const { return vars_ == other.vars_; }
  std::strong_ordering operator<=>(const CoordinatePrime& other) const {
    return vars_ <=> other.vars_;
  }

 private:
  ContextPtr ctx_;
  std::vector<std::size_t> vars_;
};

/// The maximal ideal (x - a, y - b) of the plane Q[x, y].
struct PointPrime {
  Rat x;
  Rat y;

  bool operator==(const PointPrime& other) const { return x == other.x && y == other.y; }
  std::strong_ordering operator<=>(const PointPrime& other) const {
    if (x != other.x) return x < other.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (y != other.y) return y < other.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

/// Number of standard monomials of the monomial ideal with the given
/// exponent vectors (all of size nvars). Infinite unless every variable has
/// a pure power among the generators.
Length staircase_count(const std::vector<std::vector<int>>& gens, std::size_t nvars);

/// Length of A_q / (gens) A_q for monomial data. After inverting everything
/// outside q each generator must be a monomial in q's variables times a
/// unit; otherwise UnsupportedSetting is thrown.
Length coord_local_length(const CoordinatePrime& q, const std::vector<FactoredElement>& gens);

/// Local intersection multiplicity of the plane curves F = 0 and G = 0 at P.
/// Both polynomials live in a two-variable context (x = variable 0,
/// y = variable 1). Infinite when F and G share a component through P.
Length plane_mult(const PointPrime& p, const Poly& f, const Poly& g);

/// Common zeros of f and g in the affine plane, in increasing order.
/// Throws UnsupportedSetting if some common zero may be irrational and
/// DomainError if f and g share a component.
std::vector<PointPrime> common_rational_points(const Poly& f, const Poly& g);

}  // namespace chow
