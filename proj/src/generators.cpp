#include "chow/generators.hpp"

#include <algorithm>
#include <string>

#include "chow/errors.hpp"
#include "chow/length.hpp"

namespace chow::gen {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

ContextPtr pool_context(std::size_t n) {
  static const std::vector<std::string> names{"x", "y", "z", "w", "s", "t"};
  if (n == 0 || n > names.size()) throw DomainError("pool contexts have 1 to 6 variables");
  return make_context(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(n)));
}

Rat random_unit(Rng& rng) {
  switch (rng.uniform(0, 7)) {
    case 0: return Rat(-1);
    case 1: return Rat(2);
    case 2: return Rat(-3, 2);
    default: return Rat(1);
  }
}

namespace {

FactoredElement monomial(const ContextPtr& ctx, const Rat& unit, const std::vector<int>& exps) {
  std::vector<std::pair<Poly, int>> f;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) f.emplace_back(Poly::variable(ctx, i), exps[i]);
  }
  return FactoredElement(FracElement::from_factors(ctx, unit, f));
}

std::vector<std::size_t> shuffled_indices(Rng& rng, std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(idx[i - 1], idx[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  }
  return idx;
}

}  // namespace

ElementPair random_monomial_pair(Rng& rng, const ContextPtr& ctx, int max_exp, int max_common) {
  const std::size_t n = ctx->size();
  std::vector<int> eu(n, 0);
  std::vector<int> ev(n, 0);
  int common = 0;
  for (std::size_t i : shuffled_indices(rng, n)) {
    int role = rng.uniform(0, 3);
    if (role == 3 && common >= max_common) role = rng.uniform(0, 2);
    if (role == 1 || role == 3) eu[i] = rng.uniform(1, max_exp);
    if (role == 2 || role == 3) ev[i] = rng.uniform(1, max_exp);
    if (role == 3) ++common;
  }
  return {monomial(ctx, random_unit(rng), eu), monomial(ctx, random_unit(rng), ev)};
}

ElementPair random_coprime_pair(Rng& rng, const ContextPtr& ctx, int max_exp) {
  const std::size_t n = ctx->size();
  std::vector<int> eu(n, 0);
  std::vector<int> ev(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int role = rng.uniform(0, 2);
    if (role == 1) eu[i] = rng.uniform(1, max_exp);
    if (role == 2) ev[i] = rng.uniform(1, max_exp);
  }
  return {monomial(ctx, random_unit(rng), eu), monomial(ctx, random_unit(rng), ev)};
}

ElementPair random_multi_ratio_pair(Rng& rng, const ContextPtr& ctx, int max_exp) {
  const std::size_t n = ctx->size();
  if (n < 2) throw DomainError("multi-ratio instances need two variables");
  for (;;) {
    std::vector<int> eu(n, 0);
    std::vector<int> ev(n, 0);
    const int r = rng.uniform(2, static_cast<int>(std::min<std::size_t>(n, 4)));
    auto idx = shuffled_indices(rng, n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = idx[k];
      if (static_cast<int>(k) < r) {
        eu[i] = rng.uniform(1, max_exp);
        ev[i] = rng.uniform(1, max_exp);
      } else {
        int role = rng.uniform(0, 2);
        if (role == 1) eu[i] = rng.uniform(1, max_exp);
        if (role == 2) ev[i] = rng.uniform(1, max_exp);
      }
    }
    const std::size_t first = idx[0];
    bool distinct = false;
    for (int k = 1; k < r; ++k) {
      const std::size_t i = idx[static_cast<std::size_t>(k)];
      distinct = distinct || eu[first] * ev[i] != ev[first] * eu[i];
    }
    if (distinct) return {monomial(ctx, random_unit(rng), eu), monomial(ctx, random_unit(rng), ev)};
  }
}

ElementPair random_equal_orders_pair(Rng& rng, const ContextPtr& ctx, int max_exp) {
  const std::size_t n = ctx->size();
  std::vector<int> eu(n, 0);
  std::vector<int> ev(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int role = rng.uniform(0, 3);
    if (role == 3) {
      eu[i] = ev[i] = rng.uniform(1, max_exp);
    } else if (role == 1) {
      eu[i] = rng.uniform(1, max_exp);
    } else if (role == 2) {
      ev[i] = rng.uniform(1, max_exp);
    }
  }
  return {monomial(ctx, random_unit(rng), eu), monomial(ctx, random_unit(rng), ev)};
}

FactoredElement random_monomial_in(Rng& rng, const ContextPtr& ctx, const std::vector<std::size_t>& vars,
                                   int max_exp) {
  std::vector<int> e(ctx->size(), 0);
  for (auto v : vars) e[v] = rng.uniform(0, max_exp);
  return monomial(ctx, random_unit(rng), e);
}

namespace {

Rat small_rational(Rng& rng, bool nonzero) {
  for (;;) {
    Rat r(rng.uniform(-3, 3), rng.chance(1, 4) ? 2 : 1);
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

Poly random_plane_curve(Rng& rng, const ContextPtr& ctx) {
  const Poly x = Poly::variable(ctx, 0);
  const Poly y = Poly::variable(ctx, 1);
  const int kind = rng.uniform(0, 7);
  if (kind < 4) {
    for (;;) {
      int a = rng.uniform(-3, 3);
      int b = rng.uniform(-3, 3);
      if (a != 0 || b != 0) return x.scaled(a) + y.scaled(b);
    }
  }
  const Rat c = small_rational(rng, true);
  const Rat d = small_rational(rng, false);
  if (kind < 7) return y - x.pow(2).scaled(c) - x.scaled(d);
  return x - y.pow(2).scaled(c) - y.scaled(d);
}

}  // namespace

ElementPair random_plane_pair(Rng& rng, const ContextPtr& ctx) {
  std::vector<Poly> pool;
  const int size = rng.uniform(2, 4);
  while (static_cast<int>(pool.size()) < size) {
    Poly c = primitive_part(random_plane_curve(rng, ctx)).second;
    if (std::find(pool.begin(), pool.end(), c) != pool.end()) continue;
    // Keep only curves meeting the pool at rational points.
    bool rational = true;
    for (const auto& other : pool) {
      try {
        common_rational_points(c, other);
      } catch (const UnsupportedSetting&) {
        rational = false;
        break;
      }
    }
    if (rational) pool.push_back(c);
  }
  std::vector<std::pair<Poly, int>> fu;
  std::vector<std::pair<Poly, int>> fv;
  const bool share = rng.chance(3, 4);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    int role = (share && i == 0) ? 3 : rng.uniform(0, 3);
    if (role == 1 || role == 3) fu.emplace_back(pool[i], rng.uniform(1, 2));
    if (role == 2 || role == 3) fv.emplace_back(pool[i], rng.uniform(1, 2));
  }
  return {FactoredElement(FracElement::from_factors(ctx, random_unit(rng), fu)),
          FactoredElement(FracElement::from_factors(ctx, random_unit(rng), fv))};
}

Poly random_t_poly(Rng& rng, const ContextPtr& t_ctx, int max_deg, bool allow_zero) {
  if (allow_zero && rng.chance(1, 5)) return Poly(t_ctx);
  const int deg = rng.uniform(0, max_deg);
  const int order = rng.uniform(0, std::min(deg, 2));
  std::vector<Poly::Term> terms;
  for (int k = order; k <= deg; ++k) {
    int c = rng.uniform(-3, 3);
    if ((k == order || k == deg) && c == 0) c = rng.chance(1, 2) ? 1 : -1;
    if (c != 0) terms.emplace_back(Mono{k}, Rat(c));
  }
  return Poly::from_terms(t_ctx, std::move(terms));
}

PIDMatrix random_pid_matrix(Rng& rng, const ContextPtr& t_ctx, std::size_t rows, std::size_t cols, int max_deg) {
  PIDMatrix m(t_ctx, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_t_poly(rng, t_ctx, max_deg, true));
  }
  return m;
}

std::pair<FracElement, FracElement> random_tame_pair(Rng& rng, const ContextPtr& ctx, int max_exp) {
  auto draw = [&] {
    std::vector<std::pair<Poly, int>> f;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
      if (rng.chance(1, 3)) continue;
      int e = rng.uniform(-max_exp, max_exp);
      if (e != 0) f.emplace_back(Poly::variable(ctx, i), e);
    }
    return FracElement::from_factors(ctx, random_unit(rng), f);
  };
  auto a = draw();
  auto b = draw();
  return {a, b};
}

}  // namespace chow::gen
