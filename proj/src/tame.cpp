#include "chow/tame.hpp"

#include <set>

#include "chow/errors.hpp"
#include "chow/text.hpp"

namespace chow {

namespace {

void require_monomial(const FracElement& f, const char* which) {
  for (const auto& fac : f.factors()) {
    if (!fac.poly.as_variable()) {
      throw UnsupportedSetting(std::string("tame symbol: ") + which + " has the non-coordinate factor " +
                               to_string(fac.poly));
    }
  }
}

}  // namespace

TameOutput tame(const FracElement& alpha, const FracElement& beta) {
  if (!(*alpha.context() == *beta.context())) throw ContextMismatch("tame symbol over different contexts");
  require_monomial(alpha, "alpha");
  require_monomial(beta, "beta");
  const ContextPtr& ctx = alpha.context();
  std::set<std::size_t> vars;
  for (const auto& f : alpha.factors()) vars.insert(*f.poly.as_variable());
  for (const auto& f : beta.factors()) vars.insert(*f.poly.as_variable());

  TameOutput out;
  for (auto k : vars) {
    const Poly x = Poly::variable(ctx, k);
    const int a = alpha.exponent_of(x);
    const int b = beta.exponent_of(x);
    FracElement gamma = alpha.pow(b) / beta.pow(a);
    if ((a * b) % 2 != 0) gamma = gamma * FracElement::constant(ctx, -1);
    if (gamma.exponent_of(x) != 0) throw Error("tame symbol: residue is not a unit at the prime");
    out.entries.push_back({HeightOnePrime(x), k, gamma.substitute(k, 0)});
  }
  return out;
}

Cycle gersten_compose(const FracElement& alpha, const FracElement& beta) {
  const ContextPtr& ctx = alpha.context();
  const Setting s = Setting::monomial(ctx);
  Cycle out(ctx, static_cast<int>(ctx->size()) - 2);
  for (const auto& e : tame(alpha, beta).entries) {
    out += div_frac(s, PrimeRep::principal(e.prime), e.residue);
  }
  return out;
}

}  // namespace chow
