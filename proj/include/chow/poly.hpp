#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chow {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/// Ordered list of variable names. Shared by every polynomial built over it.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VarContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names);
/// Comma-separated list, e.g. "x,w,rho,y,z".
ContextPtr make_context(const std::string& comma_list);

/// Dense exponent vector over a context; zero entries are implicit absences.
class Mono {
 public:
  Mono() = default;
  explicit Mono(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}
  Mono(std::initializer_list<int> exps);
  explicit Mono(std::vector<int> exps);

  static Mono variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  Mono operator*(const Mono& other) const;
  bool divides(const Mono& other) const;
  /// Requires divides(other); returns other / *this.
  Mono quotient_of(const Mono& other) const;

  bool operator==(const Mono& other) const { return exps_ == other.exps_; }
  /// Graded lexicographic order over the declared variable list.
  std::strong_ordering operator<=>(const Mono& other) const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Sparse multivariate polynomial over Q with terms in descending grlex order.
class Poly {
 public:
  using Term = std::pair<Mono, Rat>;

  explicit Poly(ContextPtr ctx);
  static Poly constant(ContextPtr ctx, const Rat& c);
  static Poly variable(ContextPtr ctx, std::size_t index, int power = 1);
  static Poly monomial(ContextPtr ctx, Mono m, const Rat& c);
  /// Takes terms in any order; merges duplicates and drops zeros.
  static Poly from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Value of the constant term (zero if absent).
  Rat constant_term() const;
  /// Index i when the polynomial is exactly x_i.
  std::optional<std::size_t> as_variable() const;
  bool involves(std::size_t var) const;

  int total_degree() const;
  int degree_in(std::size_t var) const;
  const Term& leading_term() const;
  const Rat& leading_coefficient() const { return leading_term().second; }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rat& c) const;
  Poly times_mono(const Mono& m) const;
  Poly pow(unsigned e) const;

  /// Replace x_var by a constant.
  Poly substitute(std::size_t var, const Rat& value) const;
  /// p(x_0 + shift_0, ..., x_{n-1} + shift_{n-1}).
  Poly translate(std::span<const Rat> shift) const;
  Rat evaluate(std::span<const Rat> point) const;

  /// Coefficients as a polynomial in x_var: entry d multiplies x_var^d.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients(ContextPtr ctx, std::size_t var,
                                const std::vector<Poly>& coeffs);

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  void check_same_context(const Poly& other) const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Canonical ordering used for factor lists and prime ideals:
/// lower total degree first, then by the descending term sequence
/// (larger leading monomial first).
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);

/// Quotient a / b; throws DomainError unless b divides a exactly.
Poly divide_exact(const Poly& a, const Poly& b);

/// Returns (c, q) with p = c * q, q having coprime integer coefficients and
/// positive leading coefficient. For p = 0 returns (0, 0).
std::pair<Rat, Poly> primitive_part(const Poly& p);

/// Largest monomial dividing every term of p (p nonzero).
Mono monomial_content(const Poly& p);

}  // namespace chow
