#include "chow/cycle.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "chow/errors.hpp"
#include "chow/text.hpp"

namespace chow {

namespace {

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || *a == *b; }

void require_context(const ContextPtr& expected, const ContextPtr& got, const char* what) {
  if (!same_context(expected, got)) throw ContextMismatch(std::string(what) + " over a different variable context");
}

// Does g vanish on the zero set of the given variables?
bool vanishes_on(const Poly& g, const std::vector<std::size_t>& vars) {
  Poly r = g;
  for (auto v : vars) r = r.substitute(v, 0);
  return r.is_zero();
}

bool in_principal(const Poly& g, const Poly& gen) {
  if (g.is_zero()) return true;
  try {
    (void)divide_exact(g, gen);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeRep

PrimeRep PrimeRep::unit(ContextPtr ctx) { return PrimeRep(std::move(ctx), UnitTag{}); }

PrimeRep PrimeRep::principal(const HeightOnePrime& p) {
  if (auto v = p.generator().as_variable()) return coordinate(CoordinatePrime(p.context(), {*v}));
  return PrimeRep(p.context(), p);
}

PrimeRep PrimeRep::coordinate(const CoordinatePrime& q) {
  if (q.context()->size() == 2 && q.height() == 2) return point(q.context(), {Rat(0), Rat(0)});
  return PrimeRep(q.context(), q);
}

PrimeRep PrimeRep::point(ContextPtr ctx, const PointPrime& p) {
  if (ctx->size() != 2) throw DomainError("points are only defined in a two-variable context");
  return PrimeRep(std::move(ctx), p);
}

int PrimeRep::dimension() const {
  const int n = static_cast<int>(ctx_->size());
  switch (kind()) {
    case Kind::unit: return n;
    case Kind::coordinate: return static_cast<int>(as_coordinate().dimension());
    case Kind::principal: return n - 1;
    case Kind::point: return 0;
  }
  return 0;
}

std::optional<Poly> PrimeRep::height_one_generator() const {
  if (kind() == Kind::principal) return as_principal().generator();
  if (kind() == Kind::coordinate && as_coordinate().height() == 1) {
    return Poly::variable(ctx_, as_coordinate().vars().front());
  }
  return std::nullopt;
}

std::vector<Poly> PrimeRep::generators() const {
  std::vector<Poly> out;
  switch (kind()) {
    case Kind::unit: break;
    case Kind::coordinate:
      for (auto v : as_coordinate().vars()) out.push_back(Poly::variable(ctx_, v));
      break;
    case Kind::principal: out.push_back(as_principal().generator()); break;
    case Kind::point: {
      const auto& p = as_point();
      out.push_back(Poly::variable(ctx_, 0) - Poly::constant(ctx_, p.x));
      out.push_back(Poly::variable(ctx_, 1) - Poly::constant(ctx_, p.y));
      break;
    }
  }
  return out;
}

bool PrimeRep::contains(const FactoredElement& x) const {
  require_context(ctx_, x.context(), "element");
  switch (kind()) {
    case Kind::unit: return false;
    case Kind::coordinate: return as_coordinate().contains(x);
    case Kind::principal: return valuation(as_principal(), x) > 0;
    case Kind::point: {
      const auto& p = as_point();
      std::vector<Rat> at{p.x, p.y};
      return std::any_of(x.factors().begin(), x.factors().end(),
                         [&](const Factor& f) { return f.poly.evaluate(at) == 0; });
    }
  }
  return false;
}

bool PrimeRep::contains(const PrimeRep& other) const {
  require_context(ctx_, other.context(), "prime");
  for (const auto& g : other.generators()) {
    bool in = false;
    switch (kind()) {
      case Kind::unit: in = false; break;
      case Kind::coordinate: in = vanishes_on(g, as_coordinate().vars()); break;
      case Kind::principal: in = in_principal(g, as_principal().generator()); break;
      case Kind::point: {
        std::vector<Rat> at{as_point().x, as_point().y};
        in = g.evaluate(at) == 0;
        break;
      }
    }
    if (!in) return false;
  }
  return true;
}

std::strong_ordering PrimeRep::operator<=>(const PrimeRep& other) const {
  if (rep_.index() != other.rep_.index()) return rep_.index() <=> other.rep_.index();
  switch (kind()) {
    case Kind::unit: return std::strong_ordering::equal;
    case Kind::coordinate: return as_coordinate() <=> other.as_coordinate();
    case Kind::principal: return as_principal() <=> other.as_principal();
    case Kind::point: return as_point() <=> other.as_point();
  }
  return std::strong_ordering::equal;
}

std::string to_string(const PrimeRep& p) {
  if (p.kind() == PrimeRep::Kind::unit) return "A";
  std::string out = "A/(";
  bool first = true;
  for (const auto& g : p.generators()) {
    if (!first) out += ",";
    first = false;
    out += to_string(g);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Cycle

Cycle Cycle::of(const PrimeRep& p, Coefficient c) {
  Cycle out(p.context(), p.dimension());
  out.add(p, c);
  return out;
}

Cycle::Coefficient Cycle::coefficient(const PrimeRep& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Cycle::add(const PrimeRep& p, Coefficient c) {
  require_context(ctx_, p.context(), "prime");
  if (p.dimension() != grade_) {
    throw DomainError("prime of dimension " + std::to_string(p.dimension()) + " in a cycle of grade " +
                      std::to_string(grade_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Cycle::merge(const Cycle& other, Coefficient sign) {
  require_context(ctx_, other.ctx_, "cycle");
  if (other.is_zero()) return;
  if (is_zero()) {
    grade_ = other.grade_;
  } else if (grade_ != other.grade_) {
    throw DomainError("adding cycles of grades " + std::to_string(grade_) + " and " +
                      std::to_string(other.grade_));
  }
  for (const auto& [p, c] : other.terms_) add(p, sign * c);
}

Cycle& Cycle::operator+=(const Cycle& other) {
  merge(other, 1);
  return *this;
}

Cycle& Cycle::operator-=(const Cycle& other) {
  merge(other, -1);
  return *this;
}

Cycle Cycle::scaled(Coefficient k) const {
  Cycle out(ctx_, grade_);
  if (k == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * k);
  return out;
}

Cycle Cycle::filtered(const std::function<bool(const PrimeRep&)>& pred) const {
  Cycle out(ctx_, grade_);
  for (const auto& [p, c] : terms_) {
    if (pred(p)) out.terms_.emplace(p, c);
  }
  return out;
}

bool Cycle::operator==(const Cycle& other) const {
  if (terms_ != other.terms_) return false;
  return terms_.empty() || grade_ == other.grade_;
}

std::string to_string(const Cycle& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, k] : c.terms()) {
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    first = false;
    out += std::to_string(k < 0 ? -k : k) + "*[" + to_string(p) + "]";
  }
  return out;
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view s, const ContextPtr& ctx) : s_(s), ctx_(ctx) {}

  Cycle parse(int zero_grade) {
    skip_space();
    if (s_.substr(i_) == "0" || (i_ < s_.size() && s_[i_] == '0' && rest_is_space(i_ + 1))) {
      return Cycle(ctx_, zero_grade);
    }
    std::optional<Cycle> out;
    bool first = true;
    while (true) {
      skip_space();
      if (i_ == s_.size()) break;
      Cycle::Coefficient sign = 1;
      if (s_[i_] == '+' || s_[i_] == '-') {
        sign = s_[i_] == '-' ? -1 : 1;
        ++i_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between cycle terms", i_);
      }
      first = false;
      Cycle::Coefficient coeff = 1;
      if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        try {
          coeff = std::stoll(std::string(s_.substr(start, i_ - start)));
        } catch (const std::out_of_range&) {
          throw ParseError("cycle coefficient out of range", start);
        }
        skip_space();
        expect('*');
        skip_space();
      }
      PrimeRep p = parse_prime();
      if (!out) out.emplace(ctx_, p.dimension());
      out->add(p, sign * coeff);
    }
    if (!out) throw ParseError("empty cycle", i_);
    return *out;
  }

 private:
  bool rest_is_space(std::size_t from) const {
    for (std::size_t k = from; k < s_.size(); ++k) {
      if (!std::isspace(static_cast<unsigned char>(s_[k]))) return false;
    }
    return true;
  }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  PrimeRep parse_prime() {
    const std::size_t start = i_;
    expect('[');
    skip_space();
    expect('A');
    skip_space();
    std::vector<Poly> gens;
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      skip_space();
      expect('(');
      std::size_t depth = 0;
      std::size_t piece = i_;
      for (;; ++i_) {
        if (i_ >= s_.size()) throw ParseError("unterminated prime", start);
        char c = s_[i_];
        if (c == '(') {
          ++depth;
        } else if ((c == ',' || c == ')') && depth == 0) {
          gens.push_back(parse_generator(piece, i_));
          piece = i_ + 1;
          if (c == ')') {
            ++i_;
            break;
          }
        } else if (c == ')') {
          --depth;
        }
      }
      skip_space();
    }
    expect(']');
    return make_prime(gens, start);
  }

  Poly parse_generator(std::size_t from, std::size_t to) {
    try {
      return parse_poly(s_.substr(from, to - from), ctx_);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad prime generator: ") + e.what(), from + e.position());
    }
  }

  PrimeRep make_prime(const std::vector<Poly>& gens, std::size_t pos) {
    if (gens.empty()) return PrimeRep::unit(ctx_);
    std::vector<std::size_t> vars;
    for (const auto& g : gens) {
      if (auto v = g.as_variable()) vars.push_back(*v);
    }
    if (vars.size() == gens.size()) return PrimeRep::coordinate(CoordinatePrime(ctx_, vars));
    if (gens.size() == 1) {
      try {
        return PrimeRep::from_generator(gens.front());
      } catch (const DomainError& e) {
        throw ParseError(e.what(), pos);
      }
    }
    if (gens.size() == 2 && ctx_->size() == 2) {
      Rat a;
      Rat b;
      if (shifted_variable(gens[0], 0, a) && shifted_variable(gens[1], 1, b)) {
        return PrimeRep::point(ctx_, {a, b});
      }
    }
    throw ParseError("unsupported prime", pos);
  }

  // g == x_var - value?
  bool shifted_variable(const Poly& g, std::size_t var, Rat& value) const {
    Poly rest = g - Poly::variable(ctx_, var);
    if (!rest.is_constant()) return false;
    value = -rest.constant_term();
    return true;
  }

  std::string_view s_;
  const ContextPtr& ctx_;
  std::size_t i_ = 0;
};

}  // namespace

Cycle parse_cycle(std::string_view text, const ContextPtr& ctx, int zero_grade) {
  return CycleParser(text, ctx).parse(zero_grade);
}

// ---------------------------------------------------------------------------
// Setting

Setting Setting::monomial(ContextPtr ctx, LengthObserver observer) {
  return Setting(std::move(ctx), Backend::monomial, std::move(observer));
}

Setting Setting::plane(ContextPtr ctx, LengthObserver observer) {
  if (ctx->size() != 2) throw UnsupportedSetting("the plane setting needs exactly two variables");
  return Setting(std::move(ctx), Backend::plane, std::move(observer));
}

// ---------------------------------------------------------------------------
// div

Length local_length(const Setting& s, const CoordinatePrime& q, const std::vector<FactoredElement>& gens) {
  Length l = coord_local_length(q, gens);
  s.notify(CoordinateLengthEvent{q, gens, l});
  return l;
}

namespace {

Length observed_plane_mult(const Setting& s, const PointPrime& p, const Poly& f, const Poly& g) {
  Length l = plane_mult(p, f, g);
  s.notify(PlaneLengthEvent{p, f, g, l});
  return l;
}

void add_length(Cycle& out, const PrimeRep& q, const Length& l, int exponent) {
  if (!l.is_finite()) throw Error("div: infinite length at a minimal prime of " + to_string(q));
  out.add(q, l.value() * exponent);
}

// div of the zero ideal: the divisor of x.
void div_of_zero(const Setting& s, const FactoredElement& x, Cycle& out) {
  for (const auto& f : x.factors()) {
    PrimeRep q = PrimeRep::from_generator(f.poly);
    if (q.kind() == PrimeRep::Kind::coordinate) {
      add_length(out, q, local_length(s, q.as_coordinate(), {x}), 1);
    } else if (q.kind() == PrimeRep::Kind::point) {
      // Unreachable: a single generator never gives a point.
      throw Error("div: unexpected point");
    } else {
      out.add(q, f.exponent);
    }
  }
}

// A curve g = 0 in the plane against x.
void div_on_curve(const Setting& s, const Poly& g, const FactoredElement& x, Cycle& out) {
  for (const auto& f : x.factors()) {
    for (const auto& pt : common_rational_points(g, f.poly)) {
      add_length(out, PrimeRep::point(s.context(), pt), observed_plane_mult(s, pt, g, f.poly), f.exponent);
    }
  }
}

void div_on_coordinate(const Setting& s, const CoordinatePrime& p, const FactoredElement& x, Cycle& out) {
  const auto& vars = p.vars();
  std::set<std::size_t> extra;
  for (const auto& f : x.factors()) {
    if (auto v = f.poly.as_variable()) {
      extra.insert(*v);
      continue;
    }
    Poly r = f.poly;
    for (auto v : vars) r = r.substitute(v, 0);
    if (!r.is_constant()) {
      throw UnsupportedSetting("factor " + to_string(f.poly) + " meets V" + to_string(PrimeRep::coordinate(p)).substr(2) +
                               " outside the coordinate strata");
    }
  }
  std::vector<FactoredElement> gens;
  for (auto v : vars) gens.push_back(FactoredElement::variable(s.context(), v));
  gens.push_back(x);
  for (auto k : extra) {
    std::vector<std::size_t> qv = vars;
    qv.push_back(k);
    CoordinatePrime q(s.context(), qv);
    add_length(out, PrimeRep::coordinate(q), local_length(s, q, gens), 1);
  }
}

void div_on_principal_monomial(const HeightOnePrime& p, const FactoredElement& x) {
  const Poly& g = p.generator();
  for (const auto& f : x.factors()) {
    auto v = f.poly.as_variable();
    if (!v) {
      throw UnsupportedSetting("div along " + to_string(p) + " of the non-monomial factor " + to_string(f.poly) +
                               " needs a non-coordinate length");
    }
    Poly r = g.substitute(*v, 0);
    if (!r.is_constant()) {
      throw UnsupportedSetting("div along " + to_string(p) + " meets V(" + to_string(f.poly) +
                               ") outside the coordinate strata");
    }
  }
}

}  // namespace

Cycle div_cycle(const Setting& s, const PrimeRep& p, const FactoredElement& x) {
  require_context(s.context(), p.context(), "prime");
  require_context(s.context(), x.context(), "element");
  if (p.contains(x)) throw DomainError("div: " + to_string(x) + " lies in " + to_string(p));
  Cycle out(s.context(), p.dimension() - 1);
  if (p.dimension() == 0) return out;
  if (p.kind() == PrimeRep::Kind::unit) {
    div_of_zero(s, x, out);
    return out;
  }
  if (s.backend() == Setting::Backend::plane) {
    auto g = p.height_one_generator();
    if (!g) throw Error("div: plane prime of dimension 1 without a generator");
    div_on_curve(s, *g, x, out);
    return out;
  }
  if (p.kind() == PrimeRep::Kind::coordinate) {
    div_on_coordinate(s, p.as_coordinate(), x, out);
  } else if (p.kind() == PrimeRep::Kind::principal) {
    div_on_principal_monomial(p.as_principal(), x);
  } else {
    throw UnsupportedSetting("points need the plane setting");
  }
  return out;
}

Cycle div_quotient(const Setting& s, const PrimeRep& p, const FactoredElement& a, const FactoredElement& b) {
  Cycle out = div_cycle(s, p, a);
  out -= div_cycle(s, p, b);
  return out;
}

Cycle div_frac(const Setting& s, const PrimeRep& p, const FracElement& f) {
  return div_quotient(s, p, numerator(f), denominator(f));
}

Cycle cap(const Setting& s, const FactoredElement& u, const Cycle& alpha) {
  require_context(s.context(), alpha.context(), "cycle");
  Cycle out(s.context(), alpha.grade() - 1);
  for (const auto& [p, c] : alpha.terms()) {
    if (p.contains(u)) continue;
    out += div_cycle(s, p, u).scaled(c);
  }
  return out;
}

std::vector<Cycle> witness_terms(const Setting& s, const Witness& w) {
  std::vector<Cycle> out;
  for (const auto& e : w.entries) out.push_back(div_quotient(s, PrimeRep::principal(e.prime), e.a, e.b));
  return out;
}

Cycle witness_rhs(const Setting& s, const Witness& w) {
  Cycle out(s.context(), static_cast<int>(s.context()->size()) - 2);
  for (const auto& t : witness_terms(s, w)) out += t;
  return out;
}

}  // namespace chow
