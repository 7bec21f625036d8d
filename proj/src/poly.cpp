#include "chow/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chow/errors.hpp"

namespace chow {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw DomainError("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

ContextPtr make_context(const std::string& comma_list) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    names.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : comma_list) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return make_context(std::move(names));
}

// ---------------------------------------------------------------------------
// Mono

Mono::Mono(std::initializer_list<int> exps) : Mono(std::vector<int>(exps)) {}

Mono::Mono(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
    degree_ += e;
  }
}

Mono Mono::variable(std::size_t nvars, std::size_t index, int power) {
  Mono m(nvars);
  m.set(index, power);
  return m;
}

void Mono::set(std::size_t i, int e) {
  if (e < 0) throw DomainError("negative exponent in monomial");
  degree_ += e - exps_.at(i);
  exps_[i] = e;
}

Mono Mono::operator*(const Mono& other) const {
  Mono r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

bool Mono::divides(const Mono& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Mono Mono::quotient_of(const Mono& other) const {
  Mono r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ -= degree_;
  return r;
}

std::strong_ordering Mono::operator<=>(const Mono& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != other.exps_[i]) return exps_[i] <=> other.exps_[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

bool term_desc(const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; }

}  // namespace

Poly::Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw DomainError("polynomial without variable context");
}

Poly Poly::constant(ContextPtr ctx, const Rat& c) {
  Poly p(ctx);
  if (c != 0) p.terms_.emplace_back(Mono(ctx->size()), c);
  return p;
}

Poly Poly::variable(ContextPtr ctx, std::size_t index, int power) {
  if (index >= ctx->size()) throw DomainError("variable index out of range");
  Poly p(ctx);
  p.terms_.emplace_back(Mono::variable(ctx->size(), index, power), Rat(1));
  return p;
}

Poly Poly::monomial(ContextPtr ctx, Mono m, const Rat& c) {
  if (m.size() != ctx->size()) throw ContextMismatch("monomial size differs from context");
  Poly p(ctx);
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Poly Poly::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Poly p(std::move(ctx));
  std::sort(terms.begin(), terms.end(), term_desc);
  for (auto& t : terms) {
    if (t.first.size() != p.ctx_->size()) throw ContextMismatch("monomial size differs from context");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rat(0);
}

std::optional<std::size_t> Poly::as_variable() const {
  if (terms_.size() != 1 || terms_[0].second != 1 || terms_[0].first.degree() != 1) {
    return std::nullopt;
  }
  const Mono& m = terms_[0].first;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 1) return i;
  }
  return std::nullopt;
}

bool Poly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.first[var] > 0; });
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().first.degree();
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

void Poly::check_same_context(const Poly& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_)) {
    throw ContextMismatch("polynomials over different variable contexts");
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_context(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      out.push_back(*b++);
    } else {
      Rat c = a->second + b->second;
      if (c != 0) out.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_context(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::map<Mono, Rat, std::greater<>> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rat& slot = acc[ma * mb];
      slot += ca * cb;
    }
  }
  Poly r(a.ctx_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  }
  return r;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly(ctx_);
  Poly r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::times_mono(const Mono& m) const {
  Poly r(*this);
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(ctx_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(std::size_t var, const Rat& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    if (m[var] > 0) {
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(m[var]));
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(m[var]));
      pw.canonicalize();
      coeff *= pw;
    }
    Mono mm(m);
    mm.set(var, 0);
    out.emplace_back(std::move(mm), std::move(coeff));
  }
  return from_terms(ctx_, std::move(out));
}

Poly Poly::translate(std::span<const Rat> shift) const {
  if (shift.size() != ctx_->size()) throw ContextMismatch("shift size differs from context");
  std::vector<Poly> linear;
  linear.reserve(shift.size());
  for (std::size_t i = 0; i < shift.size(); ++i) {
    linear.push_back(variable(ctx_, i) + constant(ctx_, shift[i]));
  }
  Poly result(ctx_);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(ctx_, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t *= linear[i].pow(static_cast<unsigned>(m[i]));
    }
    result += t;
  }
  return result;
}

Rat Poly::evaluate(std::span<const Rat> point) const {
  if (point.size() != ctx_->size()) throw ContextMismatch("point size differs from context");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d, 0)) + 1);
  for (const auto& [m, c] : terms_) {
    Mono mm(m);
    mm.set(var, 0);
    buckets[static_cast<std::size_t>(m[var])].emplace_back(std::move(mm), c);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ctx_, std::move(b)));
  if (d < 0) out.clear();
  return out;
}

Poly Poly::from_coefficients(ContextPtr ctx, std::size_t var, const std::vector<Poly>& coeffs) {
  Poly r(ctx);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    r += coeffs[d].times_mono(Mono::variable(ctx->size(), var, static_cast<int>(d)));
  }
  return r;
}

bool Poly::operator==(const Poly& other) const {
  check_same_context(other);
  return terms_ == other.terms_;
}

// ---------------------------------------------------------------------------

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    // Larger monomial sorts first.
    if (auto c = tb[i].first <=> ta[i].first; c != 0) return c;
    if (ta[i].second != tb[i].second) {
      return ta[i].second < tb[i].second ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
  }
  return ta.size() <=> tb.size();
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  Poly quotient(a.context());
  Poly rem = a;
  const auto& [lm, lc] = b.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) throw DomainError("inexact polynomial division");
    Poly step = Poly::monomial(a.context(), lm.quotient_of(rm), rc / lc);
    quotient += step;
    rem -= step * b;
  }
  return quotient;
}

std::pair<Rat, Poly> primitive_part(const Poly& p) {
  if (p.is_zero()) return {Rat(0), p};
  Int den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Int num_gcd = 0;
  for (const auto& t : p.terms()) {
    Int n = t.second.get_num() * (den_lcm / t.second.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_coefficient() < 0) factor = -factor;
  return {1 / factor, p.scaled(factor)};
}

Mono monomial_content(const Poly& p) {
  if (p.is_zero()) throw DomainError("monomial content of zero polynomial");
  std::vector<int> e = p.terms().front().first.exponents();
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], t.first[i]);
  }
  return Mono(std::move(e));
}

}  // namespace chow
