#include "chow/commutativity.hpp"

#include "chow/errors.hpp"
#include "chow/text.hpp"

namespace chow {

namespace {

FactoredElement frac_numerator(const FactoredElement& num, const FactoredElement& den) {
  return numerator(ratio(num, den));
}

FactoredElement frac_denominator(const FactoredElement& num, const FactoredElement& den) {
  return denominator(ratio(num, den));
}

void require_monomial_backend(const Setting& s, const char* what) {
  if (s.backend() != Setting::Backend::monomial) {
    throw UnsupportedSetting(std::string(what) + " needs the monomial setting");
  }
}

void require_equal_orders(const SupportPartition& part) {
  for (const auto& c : part.both) {
    if (c.n != c.m) {
      throw PreconditionError("orders of u and v differ along " + to_string(c.prime) +
                              "; use the general commutator formula");
    }
  }
}

struct Perturbation {
  FactoredElement product;
  std::vector<std::pair<HeightOnePrime, int>> primes;
};

// prod J_h^{l_h}, refusing any J_h that divides one of `avoid`.
Perturbation build_perturbation(const ContextPtr& ctx, const std::vector<Factor>& js,
                                const std::vector<const FactoredElement*>& avoid) {
  std::vector<std::pair<Poly, int>> raw;
  for (const auto& j : js) {
    if (j.exponent <= 0) throw PreconditionError("perturbation exponents must be positive");
    raw.emplace_back(j.poly, j.exponent);
  }
  FactoredElement product(FracElement::from_factors(ctx, 1, raw));
  Perturbation out{product, {}};
  for (const auto& f : product.factors()) {
    HeightOnePrime h(f.poly);
    for (const auto* e : avoid) {
      if (e->exponent_of(h.generator()) > 0) {
        throw PreconditionError("perturbation factor " + to_string(f.poly) + " divides " + to_string(*e));
      }
    }
    out.primes.emplace_back(h, f.exponent);
  }
  return out;
}

std::int64_t finite_value(const Length& l, const char* what) {
  if (!l.is_finite()) throw Error(std::string(what) + ": unexpected infinite length");
  return l.value();
}

FactoredElement as_element(const HeightOnePrime& p) { return FactoredElement::from_poly(p.generator()); }

}  // namespace

Cycle cap_cap(const Setting& s, const FactoredElement& u, const FactoredElement& v, const Cycle& alpha) {
  return cap(s, u, cap(s, v, alpha));
}

Cycle commutator_on(const Setting& s, const FactoredElement& u, const FactoredElement& v, const Cycle& alpha) {
  return cap_cap(s, u, v, alpha) - cap_cap(s, v, u, alpha);
}

Cycle commutator(const Setting& s, const FactoredElement& u, const FactoredElement& v) {
  return commutator_on(s, u, v, Cycle::fundamental(s.context()));
}

CommutatorReport verify_commutator_formula(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                                 const Witness& w) {
  SupportPartition part = support_partition(u, v);
  if (w.entries.size() != part.both.size()) {
    throw PreconditionError("witness needs exactly one entry per common prime");
  }
  for (const auto& c : part.both) {
    bool found = false;
    for (const auto& e : w.entries) found = found || e.prime == c.prime;
    if (!found) throw PreconditionError("witness has no entry for " + to_string(c.prime));
  }
  if (!witness_is_sound(w, u, v)) throw PreconditionError("witness entries do not satisfy a/b = v^n/u^m off p");

  const Cycle alpha = Cycle::fundamental(s.context());
  CommutatorReport r{cap_cap(s, u, v, alpha), cap_cap(s, v, u, alpha), Cycle(s.context(), 0),
                     Cycle(s.context(), static_cast<int>(s.context()->size()) - 2), w, {}, false};
  r.lhs = r.uv - r.vu;
  auto terms = witness_terms(s, w);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    r.rhs += terms[i];
    r.breakdown.emplace_back(w.entries[i].prime, terms[i]);
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

CommutatorReport verify_commutator_formula(const Setting& s, const FactoredElement& u, const FactoredElement& v) {
  return verify_commutator_formula(s, u, v, make_witness(u, v));
}

CommutatorReport verify_commutator_formula_on_prime(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                                          const PrimeRep& p) {
  if (p.kind() == PrimeRep::Kind::unit) return verify_commutator_formula(s, u, v);
  require_monomial_backend(s, "the commutator formula on [A/p]");
  if (p.kind() != PrimeRep::Kind::coordinate || p.as_coordinate().height() != 1) {
    throw UnsupportedSetting("the commutator formula on [A/p] is supported for p generated by one variable");
  }
  if (!u.is_monomial() || !v.is_monomial()) {
    throw UnsupportedSetting("the commutator formula on [A/p] is supported for monomial u and v");
  }
  if (p.contains(u) || p.contains(v)) throw DomainError("u and v must avoid " + to_string(p));

  const std::size_t k = p.as_coordinate().vars().front();
  const Cycle alpha = Cycle::of(p);
  Witness w = make_witness(u, v);
  CommutatorReport r{cap_cap(s, u, v, alpha), cap_cap(s, v, u, alpha), Cycle(s.context(), 0),
                     Cycle(s.context(), p.dimension() - 2), w, {}, false};
  r.lhs = r.uv - r.vu;
  for (const auto& e : w.entries) {
    std::size_t j = *e.prime.generator().as_variable();
    PrimeRep q = PrimeRep::coordinate(CoordinatePrime(s.context(), {k, j}));
    Cycle term = div_quotient(s, q, e.a, e.b);
    r.rhs += term;
    r.breakdown.emplace_back(e.prime, term);
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

namespace {

LocalCoefficientReport local_coefficient_at(const Setting& s, const SupportPartition& part, const FactoredElement& u,
                     const FactoredElement& v, const CoordinatePrime& m, const Cycle& rhs) {
  if (m.height() != 2) throw DomainError("local coefficients are compared at height-two primes");
  LocalCoefficientReport r{PrimeRep::coordinate(m)};
  for (const auto& q : part.only_v) {
    r.v_side += q.order * finite_value(local_length(s, m, {as_element(q.prime), u}), "local coefficient");
  }
  for (const auto& q : part.only_u) {
    r.u_side += q.order * finite_value(local_length(s, m, {as_element(q.prime), v}), "local coefficient");
  }
  r.rhs = rhs.coefficient(r.m);
  r.holds = r.v_side - r.u_side == r.rhs;
  return r;
}

}  // namespace

LocalCoefficientReport verify_local_coefficient(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                         const CoordinatePrime& m) {
  require_monomial_backend(s, "the local coefficient identity");
  return local_coefficient_at(s, support_partition(u, v), u, v, m, witness_rhs(s, make_witness(u, v)));
}

std::vector<LocalCoefficientReport> verify_local_coefficients(const Setting& s, const FactoredElement& u, const FactoredElement& v) {
  require_monomial_backend(s, "the local coefficient identity");
  const SupportPartition part = support_partition(u, v);
  const Cycle rhs = witness_rhs(s, make_witness(u, v));
  std::vector<LocalCoefficientReport> out;
  const std::size_t n = s.context()->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(local_coefficient_at(s, part, u, v, CoordinatePrime(s.context(), {i, j}), rhs));
    }
  }
  return out;
}

PairReport verify_equal_orders(const Setting& s, const FactoredElement& u, const FactoredElement& v) {
  const SupportPartition part = support_partition(u, v);
  require_equal_orders(part);
  PairReport r{commutator(s, u, v), Cycle(s.context(), static_cast<int>(s.context()->size()) - 2),
               frac_numerator(v, u), frac_denominator(v, u)};
  for (const auto& c : part.both) {
    const auto n = static_cast<unsigned>(c.n);
    r.rhs += div_quotient(s, PrimeRep::principal(c.prime), r.a.pow(n), r.b.pow(n));
  }
  r.holds = r.lhs == r.rhs;
  return r;
}

PairReport verify_single_prime(const Setting& s, const FactoredElement& u, const FactoredElement& v) {
  const SupportPartition part = support_partition(u, v);
  if (part.both.size() != 1) {
    throw PreconditionError("single-prime formula needs exactly one common prime, found " +
                            std::to_string(part.both.size()));
  }
  const auto& c = part.both.front();
  const FactoredElement vn = v.pow(static_cast<unsigned>(c.n));
  const FactoredElement um = u.pow(static_cast<unsigned>(c.m));
  PairReport r{commutator(s, u, v), Cycle(s.context(), 0), frac_numerator(vn, um), frac_denominator(vn, um)};
  r.rhs = div_quotient(s, PrimeRep::principal(c.prime), r.a, r.b);
  r.holds = r.lhs == r.rhs;
  return r;
}

PairReport verify_ab_swap(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                          const std::vector<Factor>& perturbation) {
  require_equal_orders(support_partition(u, v));
  const FactoredElement a = frac_numerator(v, u);
  const FactoredElement b = frac_denominator(v, u);
  const Perturbation j = build_perturbation(s.context(), perturbation, {&u, &v, &a, &b});
  PairReport r{Cycle(s.context(), 0), Cycle(s.context(), static_cast<int>(s.context()->size()) - 2),
               a * j.product, b * j.product};
  r.lhs = commutator(s, r.b, r.a);
  for (const auto& [prime, lambda] : j.primes) {
    const auto l = static_cast<unsigned>(lambda);
    r.rhs += div_quotient(s, PrimeRep::principal(prime), v.pow(l), u.pow(l));
  }
  r.holds = r.lhs == r.rhs;
  return r;
}

ThreeTermReport verify_three_term_decomposition(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                             const std::vector<Factor>& perturbation) {
  const SupportPartition part = support_partition(u, v);
  if (part.both.size() < 2) throw PreconditionError("three-term decomposition needs at least two common primes");
  AlphaSequence order = alpha_sequence(part);
  if (order.tie_block == order.ordered.size()) {
    throw PreconditionError("all ratios n_i/m_i agree; use the equal-orders formula");
  }
  const int n1 = order.ordered.front().n;
  const int m1 = order.ordered.front().m;
  const FactoredElement U = u.pow(static_cast<unsigned>(m1));
  const FactoredElement V = v.pow(static_cast<unsigned>(n1));
  const Perturbation j = build_perturbation(s.context(), perturbation, {&u, &v});

  const ContextPtr& ctx = s.context();
  const int low = static_cast<int>(ctx->size()) - 2;
  ThreeTermReport r{order,
                  frac_numerator(V, U) * j.product,
                  frac_denominator(V, U) * j.product,
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low),
                  Cycle(ctx, low)};
  const Cycle A = Cycle::fundamental(ctx);
  const auto& a1 = r.a1;
  const auto& b1 = r.b1;

  r.lhs = commutator_on(s, U, V, A);
  r.t1 = commutator_on(s, U, a1, A);
  r.t2 = commutator_on(s, b1, V, A);
  r.t3 = cap_cap(s, a1, V, A) - cap_cap(s, b1, U, A);
  r.swap_lhs = commutator_on(s, b1, a1, A);
  r.cross_lhs = cap_cap(s, V, a1, A) - cap_cap(s, U, b1, A);
  for (const auto& [prime, lambda] : j.primes) {
    r.j_rhs += div_quotient(s, PrimeRep::principal(prime), v.pow(static_cast<unsigned>(n1 * lambda)),
                            u.pow(static_cast<unsigned>(m1 * lambda)));
  }
  for (std::size_t idx = order.tie_block; idx < order.ordered.size(); ++idx) {
    const auto& c = order.ordered[idx];
    FracElement f = a1.as_fraction().pow(c.n) / u.as_fraction().pow(static_cast<int>(order.alpha[idx]));
    r.induction_rhs += div_frac(s, PrimeRep::principal(c.prime), f).scaled(m1);
  }
  r.final_rhs = witness_rhs(s, make_witness(u, v)).scaled(static_cast<Cycle::Coefficient>(m1) * n1);

  r.three_terms = r.lhs == r.t1 + r.t2 + r.t3;
  r.t2_zero = r.t2.is_zero();
  r.swap_identity = r.swap_lhs == r.j_rhs;
  r.cross_identity = r.cross_lhs == r.j_rhs;
  r.induction = r.t1 == r.induction_rhs;
  r.final_identity = r.lhs == r.final_rhs;
  return r;
}

PrincipalLengthReport verify_principal_length(const Setting& s, const FactoredElement& u,
                                                const FactoredElement& v) {
  require_monomial_backend(s, "the principal-ideal length identity");
  const SupportPartition part = support_partition(u, v);
  require_equal_orders(part);
  std::vector<std::pair<Poly, int>> gf;
  for (const auto& c : part.both) gf.emplace_back(c.prime.generator(), c.n);
  const ContextPtr& ctx = s.context();
  FactoredElement g(FracElement::from_factors(ctx, 1, gf));
  PrincipalLengthReport r{g, FactoredElement(v.as_fraction() / g.as_fraction()),
                          FactoredElement(u.as_fraction() / g.as_fraction()), {}, true};
  const std::size_t n = ctx->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      CoordinatePrime m(ctx, {i, k});
      PrincipalLengthEntry e{PrimeRep::coordinate(m)};
      e.v_quotient = finite_value(local_length(s, m, {r.v_prime, u}), "principal length");
      e.u_quotient = finite_value(local_length(s, m, {r.u_prime, v}), "principal length");
      for (const auto& q : part.only_v) {
        e.v_sum += q.order * finite_value(local_length(s, m, {as_element(q.prime), u}), "principal length");
      }
      for (const auto& q : part.only_u) {
        e.u_sum += q.order * finite_value(local_length(s, m, {as_element(q.prime), v}), "principal length");
      }
      r.holds = r.holds && e.v_quotient == e.v_sum && e.u_quotient == e.u_sum;
      r.entries.push_back(std::move(e));
    }
  }
  return r;
}

}  // namespace chow
