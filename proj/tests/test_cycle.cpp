#include <gtest/gtest.h>

#include "chow/commutativity.hpp"
#include "chow/cycle.hpp"
#include "chow/errors.hpp"
#include "chow/generators.hpp"
#include "chow/text.hpp"
#include "oracles.hpp"

using namespace chow;

namespace {

struct Xyz {
  ContextPtr ctx = make_context("x,y,z");
  Setting s = Setting::monomial(ctx);
  FactoredElement e(const char* t) const { return parse_factored(t, ctx); }
  PrimeRep p(const char* g) const { return PrimeRep::from_generator(parse_poly(g, ctx)); }
  Cycle c(const char* t, int grade = 1) const { return parse_cycle(t, ctx, grade); }
};

TEST(PrimeRep, CanonicalForms) {
  Xyz f;
  EXPECT_EQ(f.p("x").kind(), PrimeRep::Kind::coordinate);
  EXPECT_EQ(f.p("x + y").kind(), PrimeRep::Kind::principal);
  EXPECT_EQ(to_string(f.p("x + y")), "A/(x + y)");
  EXPECT_EQ(to_string(PrimeRep::unit(f.ctx)), "A");
  EXPECT_EQ(f.p("x").dimension(), 2);
  EXPECT_EQ(PrimeRep::unit(f.ctx).dimension(), 3);
  EXPECT_EQ(PrimeRep::coordinate(CoordinatePrime(f.ctx, {0, 1, 2})).dimension(), 0);

  auto plane = make_context("x,y");
  auto origin = PrimeRep::coordinate(CoordinatePrime(plane, {0, 1}));
  EXPECT_EQ(origin.kind(), PrimeRep::Kind::point);
  EXPECT_EQ(origin, PrimeRep::point(plane, PointPrime{Rat(0), Rat(0)}));
  EXPECT_EQ(to_string(PrimeRep::point(plane, PointPrime{Rat(1), Rat(-2)})), "A/(x - 1,y + 2)");
  EXPECT_THROW(PrimeRep::point(f.ctx, PointPrime{Rat(0), Rat(0)}), DomainError);
}

TEST(Cycle, ArithmeticAndText) {
  Xyz f;
  Cycle a = f.c("2*[A/(x,y)] - 1*[A/(y,z)]");
  EXPECT_EQ(to_string(a), "2*[A/(x,y)] - 1*[A/(y,z)]");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(to_string(a - a), "0");
  EXPECT_EQ(to_string(f.c("1*[A/(x,y)]").scaled(2)), "2*[A/(x,y)]");
  EXPECT_EQ(to_string(-a), "-2*[A/(x,y)] + 1*[A/(y,z)]");
  EXPECT_EQ(a.coefficient(PrimeRep::coordinate(CoordinatePrime(f.ctx, {0, 2}))), 0);
  EXPECT_THROW(a + Cycle::fundamental(f.ctx), DomainError);
  // Zero cycles of any grade are equal and add to anything.
  EXPECT_EQ(Cycle(f.ctx, 0), Cycle(f.ctx, 2));
  EXPECT_EQ(a + Cycle(f.ctx, 0), a);
  EXPECT_THROW(Cycle(f.ctx, 1).add(PrimeRep::unit(f.ctx), 1), DomainError);
}

TEST(Cycle, ParseErrors) {
  Xyz f;
  EXPECT_THROW(f.c("2*[A/(x,q)]"), ParseError);
  EXPECT_THROW(f.c("2*[B/(x,y)]"), ParseError);
  EXPECT_THROW(f.c("2*[A/(x,y)] +"), ParseError);
}

TEST(Div, Examples) {
  Xyz f;
  EXPECT_EQ(to_string(div_cycle(f.s, f.p("x"), f.e("y"))), "1*[A/(x,y)]");
  EXPECT_EQ(to_string(div_cycle(f.s, PrimeRep::unit(f.ctx), f.e("x*y"))), "1*[A/(x)] + 1*[A/(y)]");
  EXPECT_TRUE(div_cycle(f.s, f.p("x"), f.e("1")).is_zero());
  EXPECT_EQ(to_string(div_frac(f.s, f.p("x"), parse_frac("y/z", f.ctx))), "1*[A/(x,y)] - 1*[A/(x,z)]");
  EXPECT_TRUE(div_frac(f.s, f.p("x"), parse_frac("1", f.ctx)).is_zero());
  EXPECT_EQ(div_cycle(f.s, f.p("x"), f.e("y")).grade(), 1);
  EXPECT_THROW(div_cycle(f.s, f.p("x"), f.e("x*y")), DomainError);
  // Non-monomial data the coordinate back-end cannot measure.
  EXPECT_THROW(div_cycle(f.s, f.p("x"), f.e("y + z")), UnsupportedSetting);
  // ... but a factor that restricts to a unit on A/(x) is fine.
  EXPECT_EQ(to_string(div_cycle(f.s, f.p("x"), f.e("y*(x + 1)"))), "1*[A/(x,y)]");
  EXPECT_THROW(div_cycle(f.s, f.p("x"), f.e("y*(y + 1)")), UnsupportedSetting);
}

TEST(Div, FiveVarWitnessTerm) {
  auto ctx = make_context("x,w,rho,y,z");
  auto s = Setting::monomial(ctx);
  auto p = PrimeRep::from_generator(parse_poly("x", ctx));
  EXPECT_EQ(to_string(div_frac(s, p, parse_frac("rho^2*y^2/z^8", ctx))),
            "2*[A/(x,rho)] + 2*[A/(x,y)] - 8*[A/(x,z)]");
}

TEST(Div, PlaneSetting) {
  auto ctx = make_context("x,y");
  auto s = Setting::plane(ctx);
  auto parabola = PrimeRep::from_generator(parse_poly("y - x^2", ctx));
  EXPECT_EQ(to_string(div_cycle(s, parabola, parse_factored("y", ctx))), "2*[A/(x,y)]");
  EXPECT_EQ(to_string(div_cycle(s, parabola, parse_factored("y - 1", ctx))), "1*[A/(x + 1,y - 1)] + 1*[A/(x - 1,y - 1)]");
  EXPECT_THROW(div_cycle(s, parabola, parse_factored("y - 2", ctx)), UnsupportedSetting);
  EXPECT_THROW(Setting::plane(make_context("x,y,z")), UnsupportedSetting);
}

TEST(Cap, Examples) {
  Xyz f;
  Cycle alpha = f.c("1*[A/(x)] + 1*[A/(y)]", 2);
  EXPECT_EQ(to_string(cap(f.s, f.e("x*z"), alpha)), "1*[A/(x,y)] + 1*[A/(y,z)]");
  EXPECT_TRUE(cap(f.s, f.e("x"), Cycle(f.ctx, 2)).is_zero());
  EXPECT_EQ(cap(f.s, f.e("x*z"), alpha).grade(), 1);

  auto ctx = make_context("x,w,rho,y,z");
  auto s = Setting::monomial(ctx);
  auto u = parse_factored("x^2*w^3*rho*z^2", ctx);
  auto v = parse_factored("x^4*w^6*rho^3*y", ctx);
  EXPECT_EQ(to_string(cap(s, v, cap(s, u, Cycle::fundamental(ctx)))),
            "8*[A/(x,z)] + 12*[A/(w,z)] + 6*[A/(rho,z)] + 2*[A/(y,z)]");
}

// --- properties -------------------------------------------------------------

struct Instance {
  ContextPtr ctx;
  Setting s;
  FactoredElement a;
  FactoredElement b;
};

// Random monomials over a random pool, with a random coordinate prime p of
// height 1 or the zero ideal; a and b avoid p.
Instance monomial_instance(gen::Rng& rng, PrimeRep* p) {
  auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(2, 6)));
  const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ctx->size()) - 1));
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    if (i != k) others.push_back(i);
  }
  *p = rng.chance(1, 3) ? PrimeRep::unit(ctx) : PrimeRep::coordinate(CoordinatePrime(ctx, {k}));
  return {ctx, Setting::monomial(ctx), gen::random_monomial_in(rng, ctx, others, 4),
          gen::random_monomial_in(rng, ctx, others, 4)};
}

TEST(Property, DivIsMultiplicative) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    gen::Rng rng(gen::instance_seed(41, i));
    PrimeRep p = PrimeRep::unit(gen::pool_context(1));
    auto in = monomial_instance(rng, &p);
    EXPECT_EQ(div_cycle(in.s, p, in.a * in.b), div_cycle(in.s, p, in.a) + div_cycle(in.s, p, in.b));
    EXPECT_EQ(div_cycle(in.s, p, in.a).grade(), p.dimension() - 1);
  }
}

TEST(Property, DivIsMultiplicativeInThePlane) {
  auto ctx = gen::pool_context(2);
  auto s = Setting::plane(ctx);
  for (std::uint64_t i = 0; i < 300; ++i) {
    gen::Rng rng(gen::instance_seed(42, i));
    auto [u, v] = gen::random_plane_pair(rng, ctx);
    auto part = support_partition(u, v);
    for (const auto& q : part.only_u) {
      const auto p = PrimeRep::principal(q.prime);
      FactoredElement w = v * v;
      EXPECT_EQ(div_cycle(s, p, v * w), div_cycle(s, p, v) + div_cycle(s, p, w));
    }
  }
}

TEST(Property, CapIsBilinear) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    gen::Rng rng(gen::instance_seed(43, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(2, 6)));
    auto s = Setting::monomial(ctx);
    auto [u, v] = gen::random_monomial_pair(rng, ctx, 3);
    auto [x, y] = gen::random_coprime_pair(rng, ctx, 3);
    Cycle alpha = cap(s, x, Cycle::fundamental(ctx));
    Cycle beta = cap(s, y, Cycle::fundamental(ctx));
    EXPECT_EQ(cap(s, u, alpha + beta), cap(s, u, alpha) + cap(s, u, beta));
    if (!alpha.is_zero()) EXPECT_EQ(cap(s, u, alpha).grade(), alpha.grade() - 1);
    // cap(uv, alpha) = cap(u, alpha) + cap(v, alpha) when no component
    // contains u or v.
    Cycle avoiding = alpha.filtered([&](const PrimeRep& p) { return !p.contains(u) && !p.contains(v); });
    EXPECT_EQ(cap(s, u * v, avoiding), cap(s, u, avoiding) + cap(s, v, avoiding));
  }
}

// The same element written with different (unreduced) presentations has the
// same divisor.
TEST(Property, DivIndependentOfPresentation) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    gen::Rng rng(gen::instance_seed(44, i));
    PrimeRep p = PrimeRep::unit(gen::pool_context(1));
    auto in = monomial_instance(rng, &p);
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < in.ctx->size(); ++k) {
      if (!p.contains(FactoredElement::variable(in.ctx, k))) others.push_back(k);
    }
    FactoredElement c = gen::random_monomial_in(rng, in.ctx, others, 3);
    EXPECT_EQ(div_quotient(in.s, p, in.a * c, in.b * c), div_frac(in.s, p, ratio(in.a, in.b)));
  }
}

// Every length the coordinate back-end reports agrees with brute-force
// enumeration.
TEST(Property, ObservedLengthsMatchEnumeration) {
  std::size_t seen = 0;
  auto check = [&](const LengthEvent& ev) {
    const auto* c = std::get_if<CoordinateLengthEvent>(&ev);
    ASSERT_NE(c, nullptr);
    auto exps = oracle::localized_exponents(c->prime.vars(), c->generators);
    ASSERT_TRUE(exps.has_value());
    auto expected = oracle::brute_staircase(*exps, c->prime.vars().size());
    EXPECT_EQ(c->result, expected ? Length::finite(*expected) : Length::infinite());
    ++seen;
  };
  for (std::uint64_t i = 0; i < 300; ++i) {
    gen::Rng rng(gen::instance_seed(45, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(2, 5)));
    auto s = Setting::monomial(ctx, check);
    auto [u, v] = gen::random_monomial_pair(rng, ctx);
    (void)commutator(s, u, v);
  }
  EXPECT_GT(seen, 1000u);
}

TEST(Property, CycleTextRoundTrip) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    gen::Rng rng(gen::instance_seed(46, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(2, 6)));
    auto s = Setting::monomial(ctx);
    auto [u, v] = gen::random_monomial_pair(rng, ctx);
    Cycle c = cap_cap(s, u, v, Cycle::fundamental(ctx));
    EXPECT_EQ(parse_cycle(to_string(c), ctx, c.grade()), c);
  }
  auto plane = gen::pool_context(2);
  for (std::uint64_t i = 0; i < 200; ++i) {
    gen::Rng rng(gen::instance_seed(47, i));
    auto [u, v] = gen::random_plane_pair(rng, plane);
    Cycle c = commutator(Setting::plane(plane), u, v);
    EXPECT_EQ(parse_cycle(to_string(c), plane, 0), c);
  }
}

}  // namespace
