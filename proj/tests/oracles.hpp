#pragma once

// Reference computations used only by the tests. Each one recomputes a
// quantity by a different route from the library: brute-force enumeration,
// evaluation and interpolation, cofactor expansion, closed-form exponent
// arithmetic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "chow/cycle.hpp"
#include "chow/factored.hpp"
#include "chow/poly.hpp"

namespace oracle {

using chow::Poly;
using chow::Rat;

// ---------------------------------------------------------------------------
// Staircase

/// Counts exponent vectors below the box of pure powers that no generator
/// divides. nullopt when the quotient is not finite length.
inline std::optional<std::int64_t> brute_staircase(const std::vector<std::vector<int>>& gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) return 0;
  }
  std::vector<int> bound(nvars, -1);
  for (const auto& g : gens) {
    int nonzero = 0;
    std::size_t at = 0;
    for (std::size_t k = 0; k < nvars; ++k) {
      if (g[k] != 0) {
        ++nonzero;
        at = k;
      }
    }
    if (nonzero == 1 && (bound[at] < 0 || g[at] < bound[at])) bound[at] = g[at];
  }
  for (int b : bound) {
    if (b < 0) return std::nullopt;
  }
  std::int64_t count = 0;
  std::vector<int> e(nvars, 0);
  for (;;) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t k = 0; k < nvars && divides; ++k) divides = g[k] <= e[k];
      divisible = divisible || divides;
    }
    if (!divisible) ++count;
    std::size_t k = 0;
    while (k < nvars && ++e[k] == bound[k]) e[k++] = 0;
    if (k == nvars) break;
  }
  return count;
}

/// Exponent vectors (over the prime's variables) of the generators after
/// localizing at the coordinate prime. A factor is a unit there when it
/// survives setting the prime's variables to zero. nullopt if some factor is
/// neither such a unit nor one of the prime's variables.
inline std::optional<std::vector<std::vector<int>>> localized_exponents(const std::vector<std::size_t>& vars,
                                                                         const std::vector<chow::FactoredElement>& gens) {
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) {
    std::vector<int> e(vars.size(), 0);
    for (const auto& f : g.factors()) {
      auto v = f.poly.as_variable();
      auto pos = v ? std::find(vars.begin(), vars.end(), *v) : vars.end();
      if (pos != vars.end()) {
        e[static_cast<std::size_t>(pos - vars.begin())] += f.exponent;
        continue;
      }
      Poly at_zero = f.poly;
      for (auto k : vars) at_zero = at_zero.substitute(k, Rat(0));
      if (at_zero.is_zero()) return std::nullopt;
    }
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q

inline Rat det_rat(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Solves V c = y for the Vandermonde system at the given nodes.
inline std::vector<Rat> interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rat p(1);
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= nodes[i];
    }
    a[i][n] = values[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rat> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = a[i][n] / a[i][i];
  return coeffs;
}

/// Multiplicity of the root `a` of the dense polynomial sum c_i t^i;
/// -1 for the zero polynomial.
inline int dense_order_at(std::vector<Rat> c, const Rat& a) {
  if (std::all_of(c.begin(), c.end(), [](const Rat& r) { return r == 0; })) return -1;
  int order = 0;
  for (;;) {
    // Synthetic division by (t - a).
    Rat acc(0);
    std::vector<Rat> q(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * a + c[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (acc != 0) return order;
    ++order;
    c = q;
  }
}

// ---------------------------------------------------------------------------
// Resultant order (plane)

/// Sylvester determinant of F(a, y), G(a, y) taken with the formal
/// y-degrees of F and G.
inline Rat sylvester_at(const Poly& f, const Poly& g, const Rat& a) {
  const int df = f.degree_in(1);
  const int dg = g.degree_in(1);
  auto coeffs = [&](const Poly& p, int d) {
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
    for (const auto& [m, coef] : p.terms()) {
      Rat v = coef;
      for (int i = 0; i < m[0]; ++i) v *= a;
      c[static_cast<std::size_t>(m[1])] += v;
    }
    return c;
  };
  const auto cf = coeffs(f, df);
  const auto cg = coeffs(g, dg);
  const auto n = static_cast<std::size_t>(df + dg);
  if (n == 0) return Rat(1);
  std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t r = 0; r < static_cast<std::size_t>(dg); ++r) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(df); ++i) s[r][r + i] = cf[static_cast<std::size_t>(df) - i];
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(df); ++r) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(dg); ++i) {
      s[static_cast<std::size_t>(dg) + r][r + i] = cg[static_cast<std::size_t>(dg) - i];
    }
  }
  return det_rat(s);
}

/// Order at x = a of Res_y(F, G), recovered by sampling the resultant at
/// enough points to pin down its x-degree. -1 when the resultant vanishes.
inline int resultant_order(const Poly& f, const Poly& g, const Rat& a) {
  const int bound = f.total_degree() * g.total_degree() + 1;
  std::vector<Rat> nodes;
  std::vector<Rat> values;
  for (int i = 0; i <= bound; ++i) {
    nodes.emplace_back(i - bound / 2);
    values.push_back(sylvester_at(f, g, nodes.back()));
  }
  return dense_order_at(interpolate(nodes, values), a);
}

/// Leading coefficient in y evaluated at x = a.
inline Rat lc_y_at(const Poly& p, const Rat& a) {
  const int d = p.degree_in(1);
  Rat v(0);
  for (const auto& [m, coef] : p.terms()) {
    if (m[1] != d) continue;
    Rat t = coef;
    for (int i = 0; i < m[0]; ++i) t *= a;
    v += t;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Modules over Q[t]_(t) by determinantal divisors

inline int order_t(const Poly& p) {
  if (p.is_zero()) return -1;
  int best = -1;
  for (const auto& [m, c] : p.terms()) {
    if (best < 0 || m[0] < best) best = m[0];
  }
  return best;
}

inline Poly cofactor_det(const std::vector<std::vector<Poly>>& m, const chow::ContextPtr& ctx) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(ctx, Rat(1));
  if (n == 1) return m[0][0];
  Poly sum(ctx);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) minor.back().push_back(m[r][k]);
      }
    }
    Poly term = m[0][c] * cofactor_det(minor, ctx);
    sum = (c % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Torsion orders and free rank of the cokernel of an R x C matrix, from
/// the t-orders of the gcds of its k x k minors.
struct ModuleShape {
  std::vector<int> torsion;  // positive orders only
  std::size_t free_rank = 0;
};

inline ModuleShape module_shape(const std::vector<std::vector<Poly>>& rows, std::size_t cols,
                                const chow::ContextPtr& ctx) {
  const std::size_t r = rows.size();
  std::vector<int> d{0};  // ord of d_0 = 1
  for (std::size_t k = 1; k <= std::min(r, cols); ++k) {
    int best = -1;
    for (const auto& rs : subsets(r, k)) {
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<Poly>> sub;
        for (auto i : rs) {
          sub.emplace_back();
          for (auto j : cs) sub.back().push_back(rows[i][j]);
        }
        int o = order_t(cofactor_det(sub, ctx));
        if (o >= 0 && (best < 0 || o < best)) best = o;
      }
    }
    if (best < 0) break;
    d.push_back(best);
  }
  ModuleShape shape;
  const std::size_t rank = d.size() - 1;
  shape.free_rank = r - rank;
  for (std::size_t k = 1; k < d.size(); ++k) {
    if (d[k] - d[k - 1] > 0) shape.torsion.push_back(d[k] - d[k - 1]);
  }
  return shape;
}

// ---------------------------------------------------------------------------
// Monomial closed forms

using Exps = std::vector<int>;
using Pair = std::pair<std::size_t, std::size_t>;  // i < j
using PairCycle = std::map<Pair, std::int64_t>;

inline Exps exponents(const chow::FracElement& f) {
  Exps e(f.context()->size(), 0);
  for (const auto& fac : f.factors()) e[*fac.poly.as_variable()] += fac.exponent;
  return e;
}

inline void bump(PairCycle& c, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  Pair p = i < j ? Pair{i, j} : Pair{j, i};
  if ((c[p] += k) == 0) c.erase(p);
}

/// (u)∩(v)∩[A] for monomials: div(A, v) = sum_k b_k [A/(x_k)] and on each
/// (x_k) with a_k = 0, div((x_k), u) = sum_j a_j [A/(x_k, x_j)].
inline PairCycle cap_cap(const Exps& a, const Exps& b) {
  PairCycle c;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k] == 0 || a[k] != 0) continue;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != k) bump(c, k, j, static_cast<std::int64_t>(b[k]) * a[j]);
    }
  }
  return c;
}

/// sum_i div((x_i), v^{n_i} / u^{m_i}) with n_i = a_i, m_i = b_i.
inline PairCycle witness_sum(const Exps& a, const Exps& b) {
  PairCycle c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 || b[i] == 0) continue;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j != i) bump(c, i, j, static_cast<std::int64_t>(a[i]) * b[j] - static_cast<std::int64_t>(b[i]) * a[j]);
    }
  }
  return c;
}

inline PairCycle minus(PairCycle a, const PairCycle& b) {
  for (const auto& [p, k] : b) bump(a, p.first, p.second, -k);
  return a;
}

/// Reads a grade n-2 cycle on coordinate primes (x_i, x_j) (a point in two
/// variables) back into pair form.
inline PairCycle from_cycle(const chow::Cycle& c) {
  PairCycle out;
  for (const auto& [p, k] : c.terms()) {
    if (p.kind() == chow::PrimeRep::Kind::point) {
      out[{0, 1}] = k;
    } else {
      const auto& v = p.as_coordinate().vars();
      out[{v.at(0), v.at(1)}] = k;
    }
  }
  return out;
}

/// Residue of the tame symbol at (x_k) for monomials c x^a, d x^b:
/// sign (-1)^{a_k b_k} c^{b_k} / d^{a_k}, exponent a_j b_k - b_j a_k at j.
struct TameResidue {
  Rat unit;
  Exps exps;
};
inline TameResidue tame_residue(const Rat& c, const Exps& a, const Rat& d, const Exps& b, std::size_t k) {
  TameResidue r{Rat(1), Exps(a.size(), 0)};
  auto power = [](Rat base, int e) {
    Rat out(1);
    if (e < 0) {
      base = 1 / base;
      e = -e;
    }
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  };
  r.unit = power(c, b[k]) / power(d, a[k]);
  if ((a[k] * b[k]) % 2 != 0) r.unit = -r.unit;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != k) r.exps[j] = a[j] * b[k] - b[j] * a[k];
  }
  return r;
}

}  // namespace oracle
