#include "chow/univariate.hpp"

#include <algorithm>
#include <map>

#include "chow/errors.hpp"

namespace chow {

namespace {

using Coeffs = std::vector<Rat>;  // index = degree

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs to_coeffs(const Poly& p, std::size_t var) {
  Coeffs c;
  for (const auto& [m, k] : p.terms()) {
    if (static_cast<int>(m.degree()) != m[var]) {
      throw DomainError("polynomial is not univariate in the requested variable");
    }
    auto d = static_cast<std::size_t>(m[var]);
    if (c.size() <= d) c.resize(d + 1);
    c[d] = k;
  }
  trim(c);
  return c;
}

Poly from_coeffs(const ContextPtr& ctx, std::size_t var, const Coeffs& c) {
  std::vector<Poly::Term> terms;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d] != 0) terms.emplace_back(Mono::variable(ctx->size(), var, static_cast<int>(d)), c[d]);
  }
  return Poly::from_terms(ctx, std::move(terms));
}

std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  trim(a);
  if (a.size() < b.size()) return {Coeffs{}, a};
  Coeffs q(a.size() - b.size() + 1);
  const Rat& lb = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rat f = a[i] / lb;
    q[i - (b.size() - 1)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Rat horner(const Coeffs& c, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Prime factorization of n > 0 by trial division followed by Pollard rho.
void factor_into(const Int& n, std::map<Int, int>& out);

bool probably_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](const Int& v) {
      Int r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n0, std::map<Int, int>& out) {
  Int n = n0;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (probably_prime(n)) {
    out[n]++;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Int> divisors(const Int& n) {
  std::map<Int, int> pf;
  Int a = n;
  mpz_abs(a.get_mpz_t(), a.get_mpz_t());
  factor_into(a, pf);
  std::vector<Int> ds{Int(1)};
  for (const auto& [p, e] : pf) {
    std::size_t base = ds.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b, std::size_t var) {
  auto [q, r] = divmod(to_coeffs(a, var), to_coeffs(b, var));
  return {from_coeffs(a.context(), var, q), from_coeffs(a.context(), var, r)};
}

Poly gcd_univariate(const Poly& a, const Poly& b, std::size_t var) {
  Coeffs x = to_coeffs(a, var);
  Coeffs y = to_coeffs(b, var);
  while (!y.empty()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    Rat l = x.back();
    for (auto& c : x) c /= l;
  }
  return from_coeffs(a.context(), var, x);
}

int order_at(const Poly& p, std::size_t var, const Rat& point) {
  Coeffs c = to_coeffs(p, var);
  if (c.empty()) return -1;
  int k = 0;
  const Coeffs lin{-point, Rat(1)};
  while (horner(c, point) == 0) {
    c = divmod(c, lin).first;
    ++k;
  }
  return k;
}

RootSplit rational_roots(const Poly& p, std::size_t var) {
  Coeffs c = to_coeffs(p, var);
  if (c.empty()) throw DomainError("rational roots of the zero polynomial");
  RootSplit out{{}, Poly(p.context())};

  auto divide_out = [&c](const Rat& r) {
    int k = 0;
    const Coeffs lin{-r, Rat(1)};
    while (c.size() > 1 && horner(c, r) == 0) {
      c = divmod(c, lin).first;
      ++k;
    }
    return k;
  };

  if (int k = divide_out(Rat(0)); k > 0) out.roots.push_back({Rat(0), k});

  if (c.size() > 1) {
    // Integer primitive form for the rational root theorem.
    Int den = 1;
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Int low = c.front().get_num() * (den / c.front().get_den());
    Int high = c.back().get_num() * (den / c.back().get_den());
    auto ps = divisors(low);
    auto qs = divisors(high);
    std::vector<Rat> candidates;
    for (const auto& pp : ps) {
      for (const auto& qq : qs) {
        Rat r(pp, qq);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (c.size() <= 1) break;
      if (int k = divide_out(r); k > 0) out.roots.push_back({r, k});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  out.cofactor = from_coeffs(p.context(), var, c);
  return out;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const ContextPtr& ctx = a.context();
  int db = b.degree_in(var);
  if (db < 0) throw DomainError("pseudo-remainder by zero polynomial");
  auto bc = b.coefficients_in(var);
  const Poly& lb = bc.back();
  Poly r = a;
  int e = std::max(a.degree_in(var) - db + 1, 0);
  Poly xvar = Poly::variable(ctx, var);
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Poly lr = r.coefficients_in(var).back();
    r = lb * r - lr * Poly::variable(ctx, var, dr - db) * b;
    --e;
  }
  if (e > 0) r *= lb.pow(static_cast<unsigned>(e));
  return r;
}

namespace {

Poly resultant_raw(Poly a, Poly b, std::size_t var) {
  const ContextPtr& ctx = a.context();
  int da = a.degree_in(var);
  int db = b.degree_in(var);
  if (da < db) {
    Poly r = resultant_raw(b, a, var);
    return (da % 2 == 1 && db % 2 == 1) ? -r : r;
  }
  if (db == 0) return b.pow(static_cast<unsigned>(da));

  Poly g = Poly::constant(ctx, 1);
  Poly h = Poly::constant(ctx, 1);
  bool negate = false;
  for (;;) {
    da = a.degree_in(var);
    db = b.degree_in(var);
    int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) negate = !negate;
    Poly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    if (r.is_zero()) return Poly(ctx);
    b = divide_exact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.coefficients_in(var).back();
    if (delta >= 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.degree_in(var) == 0) {
      int dA = a.degree_in(var);
      Poly res = divide_exact(b.pow(static_cast<unsigned>(dA)), h.pow(static_cast<unsigned>(dA - 1)));
      return negate ? -res : res;
    }
  }
}

}  // namespace

Poly resultant(const Poly& f, const Poly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  if (f.degree_in(var) <= 0 && g.degree_in(var) <= 0) {
    throw DomainError("resultant: both inputs are constant in the eliminated variable");
  }
  Poly r = resultant_raw(f, g, var);
  if (!r.is_zero() && r.leading_coefficient() < 0) r = -r;
  return r;
}

}  // namespace chow
