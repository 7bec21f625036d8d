#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chow/factored.hpp"
#include "chow/length.hpp"
#include "chow/poly.hpp"
#include "chow/primes.hpp"

namespace chow {

/// A prime of A = Q[x_1..x_n]: the zero ideal, a height-one prime, a prime
/// generated by variables, or a rational point of the plane.
///
/// Representations are canonical: a height-one prime generated by a single
/// variable is stored as a coordinate prime, and in a two-variable context
/// the coordinate prime (x, y) is stored as the point (0, 0).
class PrimeRep {
 public:
  enum class Kind { unit, coordinate, principal, point };

  static PrimeRep unit(ContextPtr ctx);
  static PrimeRep principal(const HeightOnePrime& p);
  static PrimeRep coordinate(const CoordinatePrime& q);
  /// Throws DomainError unless the context has exactly two variables.
  static PrimeRep point(ContextPtr ctx, const PointPrime& p);
  /// The height-one prime generated by g (see HeightOnePrime).
  static PrimeRep from_generator(const Poly& g) { return principal(HeightOnePrime(g)); }

  const ContextPtr& context() const noexcept { return ctx_; }
  Kind kind() const noexcept { return static_cast<Kind>(rep_.index()); }
  /// dim A/p.
  int dimension() const;

  const CoordinatePrime& as_coordinate() const { return std::get<CoordinatePrime>(rep_); }
  const HeightOnePrime& as_principal() const { return std::get<HeightOnePrime>(rep_); }
  const PointPrime& as_point() const { return std::get<PointPrime>(rep_); }

  /// Generator of a height-one prime (principal or one-variable coordinate).
  std::optional<Poly> height_one_generator() const;
  /// Generators of the ideal; empty for the zero ideal.
  std::vector<Poly> generators() const;

  /// Is the nonzero element x in this prime?
  bool contains(const FactoredElement& x) const;
  /// Is every generator of `other` in this prime (other ⊆ this)?
  bool contains(const PrimeRep& other) const;

  bool operator==(const PrimeRep& other) const { return rep_ == other.rep_; }
  std::strong_ordering operator<=>(const PrimeRep& other) const;

 private:
  struct UnitTag {
    bool operator==(const UnitTag&) const = default;
  };
  using Rep = std::variant<UnitTag, CoordinatePrime, HeightOnePrime, PointPrime>;

  PrimeRep(ContextPtr ctx, Rep rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

  ContextPtr ctx_;
  Rep rep_;
};

/// "A", "A/(x,y)", "A/(x + y + z)", "A/(x - 1,y + 2)".
std::string to_string(const PrimeRep& p);

/// Element of Z_i(A): a finite integer combination of primes of dimension i.
class Cycle {
 public:
  using Coefficient = std::int64_t;

  Cycle(ContextPtr ctx, int grade) : ctx_(std::move(ctx)), grade_(grade) {}
  static Cycle of(const PrimeRep& p, Coefficient c = 1);
  /// [A].
  static Cycle fundamental(const ContextPtr& ctx) { return of(PrimeRep::unit(ctx)); }

  const ContextPtr& context() const noexcept { return ctx_; }
  int grade() const noexcept { return grade_; }
  const std::map<PrimeRep, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const PrimeRep& p) const;

  /// Throws DomainError if p does not have dimension grade().
  void add(const PrimeRep& p, Coefficient c);

  /// Grades must agree unless one side is zero.
  Cycle& operator+=(const Cycle& other);
  Cycle& operator-=(const Cycle& other);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  Cycle operator-() const { return scaled(-1); }
  Cycle scaled(Coefficient k) const;

  /// Components whose prime satisfies pred.
  Cycle filtered(const std::function<bool(const PrimeRep&)>& pred) const;

  /// Zero cycles compare equal whatever their grade.
  bool operator==(const Cycle& other) const;

 private:
  void merge(const Cycle& other, Coefficient sign);

  ContextPtr ctx_;
  int grade_;
  std::map<PrimeRep, Coefficient> terms_;
};

/// "2*[A/(x,y)] + 3*[A/(w,y)] - 1*[A/(y,z)]", or "0".
std::string to_string(const Cycle& c);

/// Inverse of to_string. The grade of "0" is taken from `zero_grade`.
Cycle parse_cycle(std::string_view text, const ContextPtr& ctx, int zero_grade = 0);

// ---------------------------------------------------------------------------
// Length back-ends

/// A length computed while evaluating a div: either a staircase count at a
/// coordinate prime or a plane intersection multiplicity at a point.
struct CoordinateLengthEvent {
  CoordinatePrime prime;
  std::vector<FactoredElement> generators;
  Length result;
};
struct PlaneLengthEvent {
  PointPrime point;
  Poly f;
  Poly g;
  Length result;
};
using LengthEvent = std::variant<CoordinateLengthEvent, PlaneLengthEvent>;
using LengthObserver = std::function<void(const LengthEvent&)>;

/// Which length back-end div uses, plus an optional observer that sees every
/// length computed.
class Setting {
 public:
  enum class Backend { monomial, plane };

  /// Coordinate primes and staircase lengths; non-monomial data is rejected
  /// unless it is a unit at every prime involved.
  static Setting monomial(ContextPtr ctx, LengthObserver observer = {});
  /// A = Q[x, y]; lengths are intersection multiplicities at rational points.
  /// Throws UnsupportedSetting unless the context has two variables.
  static Setting plane(ContextPtr ctx, LengthObserver observer = {});

  const ContextPtr& context() const noexcept { return ctx_; }
  Backend backend() const noexcept { return backend_; }
  void notify(const LengthEvent& e) const {
    if (observer_) observer_(e);
  }

 private:
  Setting(ContextPtr ctx, Backend b, LengthObserver obs)
      : ctx_(std::move(ctx)), backend_(b), observer_(std::move(obs)) {}

  ContextPtr ctx_;
  Backend backend_;
  LengthObserver observer_;
};

/// coord_local_length, reported to the setting's observer.
Length local_length(const Setting& s, const CoordinatePrime& q, const std::vector<FactoredElement>& gens);

// ---------------------------------------------------------------------------
// div and cap

/// sum over primes q one dimension below p of l(A_q / (p, x) A_q) [A/q].
/// Throws DomainError if x lies in p, UnsupportedSetting when the back-end
/// cannot compute the lengths exactly.
Cycle div_cycle(const Setting& s, const PrimeRep& p, const FactoredElement& x);

/// div_cycle(p, num f) - div_cycle(p, den f) for the reduced fraction f.
Cycle div_frac(const Setting& s, const PrimeRep& p, const FracElement& f);

/// div_cycle(p, a) - div_cycle(p, b) without cancelling common factors.
Cycle div_quotient(const Setting& s, const PrimeRep& p, const FactoredElement& a,
                   const FactoredElement& b);

/// (u) ∩ alpha: components containing u drop out; the rest contribute
/// coefficient * div(p, u). The result has grade alpha.grade() - 1.
Cycle cap(const Setting& s, const FactoredElement& u, const Cycle& alpha);

/// Per-prime terms div(p_i, a_i) - div(p_i, b_i) of a witness.
std::vector<Cycle> witness_terms(const Setting& s, const Witness& w);
/// Their sum, a cycle of grade n - 2.
Cycle witness_rhs(const Setting& s, const Witness& w);

}  // namespace chow
