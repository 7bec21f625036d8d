#include "chow/primes.hpp"

#include <algorithm>

#include "chow/errors.hpp"
#include "chow/text.hpp"

namespace chow {

namespace {

Poly normalized_generator(const Poly& g) {
  if (g.is_constant()) throw DomainError("constant polynomial does not generate a prime");
  if (g.is_monomial() && g.total_degree() > 1) {
    throw DomainError("monomial of degree > 1 does not generate a prime");
  }
  return primitive_part(g).second;
}

}  // namespace

HeightOnePrime::HeightOnePrime(const Poly& g) : gen_(normalized_generator(g)) {}

std::string to_string(const HeightOnePrime& p) { return "(" + to_string(p.generator()) + ")"; }

int valuation(const HeightOnePrime& p, const FracElement& f) { return f.exponent_of(p.generator()); }

SupportPartition support_partition(const FactoredElement& u, const FactoredElement& v) {
  SupportPartition part;
  for (const auto& f : u.factors()) {
    int m = v.exponent_of(f.poly);
    if (m > 0) {
      part.both.push_back({HeightOnePrime(f.poly), f.exponent, m});
    } else {
      part.only_u.push_back({HeightOnePrime(f.poly), f.exponent});
    }
  }
  for (const auto& f : v.factors()) {
    if (u.exponent_of(f.poly) == 0) part.only_v.push_back({HeightOnePrime(f.poly), f.exponent});
  }
  return part;
}

Witness make_witness(const FactoredElement& u, const FactoredElement& v) {
  Witness w;
  for (const auto& c : support_partition(u, v).both) {
    FracElement q = v.as_fraction().pow(c.n) / u.as_fraction().pow(c.m);
    w.entries.push_back({c.prime, numerator(q), denominator(q)});
  }
  return w;
}

Witness perturb_witness(const Witness& w, const FactoredElement& c) {
  Witness out;
  for (const auto& e : w.entries) {
    if (valuation(e.prime, c) != 0) {
      throw DomainError("perturbation factor lies in the witness prime " + to_string(e.prime));
    }
    out.entries.push_back({e.prime, e.a * c, e.b * c});
  }
  return out;
}

bool witness_is_sound(const Witness& w, const FactoredElement& u, const FactoredElement& v) {
  for (const auto& e : w.entries) {
    if (valuation(e.prime, e.a) != 0 || valuation(e.prime, e.b) != 0) return false;
    int n = valuation(e.prime, u);
    int m = valuation(e.prime, v);
    if (n <= 0 || m <= 0) return false;
    Poly lhs = expand(e.a) * expand(u).pow(static_cast<unsigned>(m));
    Poly rhs = expand(e.b) * expand(v).pow(static_cast<unsigned>(n));
    if (lhs != rhs) return false;
  }
  return true;
}

AlphaSequence alpha_sequence(const SupportPartition& part) {
  if (part.both.empty()) throw PreconditionError("alpha sequence needs at least one common prime");
  AlphaSequence out;
  out.ordered = part.both;
  std::sort(out.ordered.begin(), out.ordered.end(), [](const auto& a, const auto& b) {
    return a.prime < b.prime;
  });
  // n_a/m_a > n_b/m_b  <=>  n_a m_b > n_b m_a  (all positive)
  std::stable_sort(out.ordered.begin(), out.ordered.end(), [](const auto& a, const auto& b) {
    return std::int64_t{a.n} * b.m > std::int64_t{b.n} * a.m;
  });
  const auto& first = out.ordered.front();
  out.tie_block = 0;
  for (const auto& c : out.ordered) {
    std::int64_t a = std::int64_t{first.n} * c.m - std::int64_t{first.m} * c.n;
    out.alpha.push_back(a);
    if (a == 0) ++out.tie_block;
  }
  return out;
}

}  // namespace chow
