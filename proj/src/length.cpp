#include "chow/length.hpp"

#include <algorithm>
#include <map>

#include "chow/errors.hpp"
#include "chow/univariate.hpp"

namespace chow {

Length Length::finite(std::int64_t n) {
  if (n < 0) throw DomainError("negative length");
  Length l;
  l.finite_ = true;
  l.n_ = n;
  return l;
}

std::int64_t Length::value() const {
  if (!finite_) throw DomainError("length is infinite");
  return n_;
}

Length Length::operator+(const Length& other) const {
  if (!finite_ || !other.finite_) return infinite();
  return finite(n_ + other.n_);
}

std::string to_string(const Length& l) {
  return l.is_finite() ? std::to_string(l.value()) : std::string("inf");
}

// ---------------------------------------------------------------------------

CoordinatePrime::CoordinatePrime(ContextPtr ctx, std::vector<std::size_t> vars)
    : ctx_(std::move(ctx)), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty()) throw DomainError("coordinate prime needs at least one variable");
  if (vars_.back() >= ctx_->size()) throw DomainError("coordinate prime variable out of range");
}

bool CoordinatePrime::contains_var(std::size_t v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

namespace {

Poly restrict_to_zero(const Poly& p, const std::vector<std::size_t>& vars) {
  Poly r = p;
  for (auto v : vars) r = r.substitute(v, 0);
  return r;
}

}  // namespace

bool CoordinatePrime::contains(const FactoredElement& e) const {
  for (const auto& f : e.factors()) {
    if (auto v = f.poly.as_variable()) {
      if (contains_var(*v)) return true;
    } else if (restrict_to_zero(f.poly, vars_).is_zero()) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

Length staircase_rec(std::vector<std::vector<int>> gens, std::size_t first, std::size_t nvars) {
  for (const auto& g : gens) {
    bool unit = true;
    for (std::size_t i = first; i < nvars; ++i) unit = unit && g[i] == 0;
    if (unit) return Length::finite(0);
  }
  if (first == nvars) return Length::finite(1);

  int bound = -1;  // smallest pure power of x_first
  for (const auto& g : gens) {
    bool pure = g[first] > 0;
    for (std::size_t i = first + 1; pure && i < nvars; ++i) pure = g[i] == 0;
    if (pure && (bound < 0 || g[first] < bound)) bound = g[first];
  }
  if (bound < 0) return Length::infinite();

  // Slice at x_first^e: generators whose x_first-exponent is <= e.
  std::vector<int> breaks{0};
  for (const auto& g : gens) {
    if (g[first] > 0 && g[first] < bound) breaks.push_back(g[first]);
  }
  breaks.push_back(bound);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::int64_t total = 0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    int e = breaks[k];
    std::vector<std::vector<int>> slice;
    for (const auto& g : gens) {
      if (g[first] <= e) slice.push_back(g);
    }
    Length sub = staircase_rec(std::move(slice), first + 1, nvars);
    if (!sub.is_finite()) return Length::infinite();
    total += sub.value() * (breaks[k + 1] - e);
  }
  return Length::finite(total);
}

}  // namespace

Length staircase_count(const std::vector<std::vector<int>>& gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw DomainError("exponent vector of the wrong size");
    for (int e : g) {
      if (e < 0) throw DomainError("negative exponent in monomial generator");
    }
  }
  // Every variable needs a pure power for finite colength.
  for (std::size_t i = 0; i < nvars; ++i) {
    bool any_unit = false;
    bool has_pure = false;
    for (const auto& g : gens) {
      bool others_zero = true;
      for (std::size_t j = 0; j < nvars; ++j) {
        if (j != i && g[j] != 0) others_zero = false;
      }
      if (others_zero && g[i] == 0) any_unit = true;
      if (others_zero && g[i] > 0) has_pure = true;
    }
    if (any_unit) return Length::finite(0);
    if (!has_pure) return Length::infinite();
  }
  return staircase_rec(gens, 0, nvars);
}

Length coord_local_length(const CoordinatePrime& q, const std::vector<FactoredElement>& gens) {
  const auto& qv = q.vars();
  std::vector<std::vector<int>> exps;
  for (const auto& g : gens) {
    if (g.context() != q.context() && !(*g.context() == *q.context())) {
      throw ContextMismatch("generator over a different variable context");
    }
    std::vector<int> e(qv.size(), 0);
    for (const auto& f : g.factors()) {
      auto v = f.poly.as_variable();
      if (v && q.contains_var(*v)) {
        auto pos = static_cast<std::size_t>(std::lower_bound(qv.begin(), qv.end(), *v) - qv.begin());
        e[pos] += f.exponent;
      } else if (restrict_to_zero(f.poly, qv).is_zero()) {
        throw UnsupportedSetting("generator is not a monomial times a unit after localizing");
      }
    }
    exps.push_back(std::move(e));
  }
  return staircase_count(exps, qv.size());
}

// ---------------------------------------------------------------------------
// Plane curves: x is variable 0, y is variable 1.

namespace {

void check_plane(const Poly& f) {
  if (f.context()->size() != 2) throw UnsupportedSetting("plane computations need exactly two variables");
}

// Gcd in Q[x][y] by the primitive pseudo-remainder sequence.
Poly content_in_x(const Poly& p) {
  Poly c(p.context());
  for (const Poly& a : p.coefficients_in(1)) c = gcd_univariate(c, a, 0);
  return c;
}

Poly bivariate_gcd(const Poly& f, const Poly& g) {
  const Poly cf = content_in_x(f);
  const Poly cg = content_in_x(g);
  const Poly c = gcd_univariate(cf, cg, 0);
  Poly a = divide_exact(f, cf);
  Poly b = divide_exact(g, cg);
  if (a.degree_in(1) < b.degree_in(1)) std::swap(a, b);
  while (b.degree_in(1) > 0) {
    Poly r = pseudo_remainder(a, b, 1);
    if (r.is_zero()) return c * primitive_part(b).second;
    a = std::move(b);
    b = divide_exact(r, content_in_x(r));
  }
  return c;
}

// Intersection multiplicity at the origin. Curves without a common component
// meet with multiplicity at most `budget` (Bezout), and every split below
// adds at least one, so overrunning the budget means a shared component.
Length mult_at_origin(Poly f, Poly g, std::int64_t budget) {
  constexpr std::size_t x = 0;
  constexpr std::size_t y = 1;
  const ContextPtr ctx = f.context();
  if (f.constant_term() != 0 || g.constant_term() != 0) return Length::finite(0);
  for (;;) {
    // A reduction that cancels g entirely means a shared component.
    if (f.is_zero() || g.is_zero()) return Length::infinite();
    Poly r = f.substitute(y, 0);
    Poly s = g.substitute(y, 0);
    if (r.is_zero() && s.is_zero()) return Length::infinite();
    if (r.is_zero()) {
      std::swap(f, g);
      std::swap(r, s);
    }
    if (s.is_zero()) {
      // g = y * h:  I(f, g) = I(f, y) + I(f, h), and I(f, y) = ord_0 f(x, 0).
      Poly h = divide_exact(g, Poly::variable(ctx, y));
      const int here = order_at(r, x, 0);
      if (here > budget) return Length::infinite();
      Length rest = mult_at_origin(f, h, budget - here);
      return Length::finite(here) + rest;
    }
    int dr = r.degree_in(x);
    int ds = s.degree_in(x);
    if (dr > ds) {
      std::swap(f, g);
      std::swap(r, s);
      std::swap(dr, ds);
    }
    Rat lr = r.leading_coefficient();
    Rat ls = s.leading_coefficient();
    g = g.scaled(lr) - f.times_mono(Mono::variable(2, x, ds - dr)).scaled(ls);
    // Constant factors do not change the multiplicity; keep coefficients small.
    if (!g.is_zero()) g = primitive_part(g).second;
    Poly s_new = g.substitute(y, 0);
    if (!s_new.is_zero() && s_new.degree_in(x) >= ds) {
      throw Error("intersection multiplicity: reduction step failed to lower the degree");
    }
  }
}

}  // namespace

Length plane_mult(const PointPrime& p, const Poly& f, const Poly& g) {
  check_plane(f);
  check_plane(g);
  if (f.is_zero() || g.is_zero()) throw DomainError("intersection multiplicity with the zero polynomial");
  std::vector<Rat> shift{p.x, p.y};
  Poly ft = f.translate(shift);
  Poly gt = g.translate(shift);
  // A common component through the point gives infinite length; one that
  // misses the point is a local unit and is divided out.
  const Poly common = bivariate_gcd(ft, gt);
  if (!common.is_constant()) {
    if (common.constant_term() == 0) return Length::infinite();
    ft = divide_exact(ft, common);
    gt = divide_exact(gt, common);
  }
  const std::int64_t bezout = static_cast<std::int64_t>(ft.total_degree()) * gt.total_degree();
  return mult_at_origin(std::move(ft), std::move(gt), bezout);
}

std::vector<PointPrime> common_rational_points(const Poly& f, const Poly& g) {
  check_plane(f);
  check_plane(g);
  constexpr std::size_t x = 0;
  constexpr std::size_t y = 1;
  if (f.is_zero() || g.is_zero()) throw DomainError("common zeros with the zero polynomial");

  // A polynomial in x whose roots contain the x-coordinates of all common zeros.
  Poly proj(f.context());
  if (f.degree_in(y) <= 0) {
    proj = f;
  } else if (g.degree_in(y) <= 0) {
    proj = g;
  } else {
    proj = resultant(f, g, y);
  }
  if (proj.is_zero()) throw DomainError("curves share a component");
  if (proj.is_constant()) return {};

  RootSplit xs = rational_roots(proj, x);
  if (!xs.cofactor.is_constant()) {
    throw UnsupportedSetting("curves may meet at points with irrational coordinates");
  }
  std::vector<PointPrime> out;
  for (const auto& rx : xs.roots) {
    Poly fa = f.substitute(x, rx.value);
    Poly ga = g.substitute(x, rx.value);
    if (fa.is_zero() && ga.is_zero()) throw DomainError("curves share a vertical component");
    Poly h = gcd_univariate(fa, ga, y);
    if (h.is_constant()) continue;
    RootSplit ys = rational_roots(h, y);
    if (!ys.cofactor.is_constant()) {
      throw UnsupportedSetting("curves meet at a point with irrational coordinates");
    }
    for (const auto& ry : ys.roots) out.push_back({rx.value, ry.value});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chow
