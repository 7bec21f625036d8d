#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "chow/factored.hpp"
#include "chow/pid.hpp"
#include "chow/poly.hpp"

namespace chow::gen {

// Random instances for the property suites and the `fuzz` command.
// Everything is drawn from std::mt19937_64 with plain modular reduction, so
// a (seed, index) pair reproduces the same instance on every platform.

/// Seed for instance `index` of a run seeded with `seed` (splitmix64).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi] (inclusive).
  int uniform(int lo, int hi);
  /// True with probability num/den.
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Context x, y, z, w, s, t truncated to n variables (1 <= n <= 6).
ContextPtr pool_context(std::size_t n);

/// A small nonzero rational unit (1 most of the time).
Rat random_unit(Rng& rng);

using ElementPair = std::pair<FactoredElement, FactoredElement>;

/// Monomials u, v over ctx with exponents in [1, max_exp] and at most
/// max_common shared variables. Either may come out a constant.
ElementPair random_monomial_pair(Rng& rng, const ContextPtr& ctx, int max_exp = 5, int max_common = 4);

/// Monomials with no common variable (a regular sequence when both are
/// nonconstant).
ElementPair random_coprime_pair(Rng& rng, const ContextPtr& ctx, int max_exp = 5);

/// At least two common variables and at least two distinct ratios n_i/m_i.
/// Needs ctx->size() >= 2.
ElementPair random_multi_ratio_pair(Rng& rng, const ContextPtr& ctx, int max_exp = 5);

/// Equal orders along every common variable.
ElementPair random_equal_orders_pair(Rng& rng, const ContextPtr& ctx, int max_exp = 4);

/// Random monomial in the given variables (exponents in [0, max_exp]).
FactoredElement random_monomial_in(Rng& rng, const ContextPtr& ctx, const std::vector<std::size_t>& vars,
                                   int max_exp);

/// Products of rational curves through the origin of Q[x, y]: lines
/// a x + b y, parabolas y = c x^2 + d x and occasionally x = c y^2 + d y.
/// Any two curves in a pair meet only at rational points. Shares at least
/// one factor most of the time.
ElementPair random_plane_pair(Rng& rng, const ContextPtr& plane_ctx);

/// rows x cols matrix over Q[t] with entries of degree <= max_deg, biased
/// toward multiples of t.
PIDMatrix random_pid_matrix(Rng& rng, const ContextPtr& t_ctx, std::size_t rows, std::size_t cols,
                            int max_deg = 4);
/// Nonzero polynomial in t of degree <= max_deg.
Poly random_t_poly(Rng& rng, const ContextPtr& t_ctx, int max_deg = 4, bool allow_zero = false);

/// Monomial rational functions with exponents in [-max_exp, max_exp].
std::pair<FracElement, FracElement> random_tame_pair(Rng& rng, const ContextPtr& ctx, int max_exp = 4);

}  // namespace chow::gen
