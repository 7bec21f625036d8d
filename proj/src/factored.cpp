#include "chow/factored.hpp"

#include <algorithm>

#include "chow/errors.hpp"

namespace chow {

namespace {

Rat rat_pow(const Rat& base, int e) {
  if (base == 0) throw DomainError("zero raised to a power in a unit");
  Rat r = 1;
  Rat b = e >= 0 ? base : Rat(1 / base);
  for (int i = 0, n = std::abs(e); i < n; ++i) r *= b;
  return r;
}

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    return canonical_compare(a.poly, b.poly) < 0;
  });
}

// Accumulates (canonical poly, exponent) pairs, merging equal generators.
void accumulate(std::vector<Factor>& acc, Poly p, int e) {
  for (auto& f : acc) {
    if (f.poly == p) {
      f.exponent += e;
      return;
    }
  }
  acc.push_back(Factor{std::move(p), e});
}

}  // namespace

bool is_certified_irreducible(const Poly& p) { return p.total_degree() == 1; }

FracElement::FracElement(ContextPtr ctx) : ctx_(std::move(ctx)), unit_(1) {
  if (!ctx_) throw DomainError("element without variable context");
}

FracElement FracElement::from_factors(ContextPtr ctx, const Rat& unit,
                                      const std::vector<std::pair<Poly, int>>& factors) {
  if (unit == 0) throw DomainError("zero unit: the zero element has no factored form");
  Rat u = unit;
  std::vector<Factor> acc;
  for (const auto& [poly, e] : factors) {
    if (poly.context() != ctx && !(*poly.context() == *ctx)) {
      throw ContextMismatch("factor over a different variable context");
    }
    if (poly.is_zero()) throw DomainError("zero factor");
    if (e == 0) continue;
    if (poly.is_constant()) {
      u *= rat_pow(poly.constant_term(), e);
      continue;
    }
    Mono content = monomial_content(poly);
    Poly rest = poly;
    if (!content.is_one()) {
      rest = divide_exact(poly, Poly::monomial(ctx, content, 1));
      for (std::size_t i = 0; i < content.size(); ++i) {
        if (content[i] > 0) accumulate(acc, Poly::variable(ctx, i), content[i] * e);
      }
    }
    auto [c, prim] = primitive_part(rest);
    u *= rat_pow(c, e);
    if (!prim.is_constant()) accumulate(acc, std::move(prim), e);
  }
  std::erase_if(acc, [](const Factor& f) { return f.exponent == 0; });
  sort_factors(acc);
  return FracElement(std::move(ctx), std::move(u), std::move(acc));
}

FracElement FracElement::from_poly(const Poly& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no factored form");
  return from_factors(p.context(), 1, {{p, 1}});
}

FracElement FracElement::variable(ContextPtr ctx, std::size_t index, int exponent) {
  Poly x = Poly::variable(ctx, index);
  return from_factors(std::move(ctx), 1, {{x, exponent}});
}

FracElement FracElement::constant(ContextPtr ctx, const Rat& c) {
  return from_factors(std::move(ctx), c, {});
}

int FracElement::exponent_of(const Poly& generator) const {
  for (const auto& f : factors_) {
    if (f.poly == generator) return f.exponent;
  }
  return 0;
}

bool FracElement::is_monomial() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.poly.as_variable().has_value(); });
}

bool FracElement::is_integral() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.exponent > 0; });
}

FracElement FracElement::operator*(const FracElement& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_)) {
    throw ContextMismatch("elements over different variable contexts");
  }
  std::vector<Factor> acc = factors_;
  for (const auto& f : other.factors_) accumulate(acc, f.poly, f.exponent);
  std::erase_if(acc, [](const Factor& f) { return f.exponent == 0; });
  sort_factors(acc);
  return FracElement(ctx_, unit_ * other.unit_, std::move(acc));
}

FracElement FracElement::operator/(const FracElement& other) const {
  return *this * other.inverse();
}

FracElement FracElement::pow(int e) const {
  if (e == 0) return FracElement(ctx_);
  std::vector<Factor> fs = factors_;
  for (auto& f : fs) f.exponent *= e;
  return FracElement(ctx_, rat_pow(unit_, e), std::move(fs));
}

FracElement FracElement::substitute(std::size_t var, const Rat& value) const {
  std::vector<std::pair<Poly, int>> raw;
  raw.reserve(factors_.size());
  for (const auto& f : factors_) {
    Poly s = f.poly.substitute(var, value);
    if (s.is_zero()) throw DomainError("factor vanishes identically under substitution");
    raw.emplace_back(std::move(s), f.exponent);
  }
  return from_factors(ctx_, unit_, raw);
}

bool FracElement::operator==(const FracElement& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_)) {
    throw ContextMismatch("elements over different variable contexts");
  }
  return unit_ == other.unit_ && factors_ == other.factors_;
}

FactoredElement::FactoredElement(FracElement f) : frac_(std::move(f)) {
  if (!frac_.is_integral()) throw DomainError("factored ring element with a negative exponent");
}

Poly expand(const FactoredElement& e) {
  Poly r = Poly::constant(e.context(), e.unit());
  for (const auto& f : e.factors()) r *= f.poly.pow(static_cast<unsigned>(f.exponent));
  return r;
}

FracElement reduce_fraction(const FracElement& f) {
  std::vector<std::pair<Poly, int>> raw;
  raw.reserve(f.factors().size());
  for (const auto& fac : f.factors()) raw.emplace_back(fac.poly, fac.exponent);
  return FracElement::from_factors(f.context(), f.unit(), raw);
}

FracElement ratio(const FactoredElement& num, const FactoredElement& den) {
  return num.as_fraction() / den.as_fraction();
}

FactoredElement numerator(const FracElement& f) {
  std::vector<std::pair<Poly, int>> raw;
  for (const auto& fac : f.factors()) {
    if (fac.exponent > 0) raw.emplace_back(fac.poly, fac.exponent);
  }
  return FactoredElement(FracElement::from_factors(f.context(), f.unit(), raw));
}

FactoredElement denominator(const FracElement& f) {
  std::vector<std::pair<Poly, int>> raw;
  for (const auto& fac : f.factors()) {
    if (fac.exponent < 0) raw.emplace_back(fac.poly, -fac.exponent);
  }
  return FactoredElement(FracElement::from_factors(f.context(), 1, raw));
}

}  // namespace chow
