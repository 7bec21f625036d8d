#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chow/factored.hpp"
#include "chow/poly.hpp"

namespace chow {

/// Height-one prime of the UFD Q[x_1..x_n]; always principal, so it is
/// identified with its canonical (primitive, positive leading coefficient)
/// generator.
class HeightOnePrime {
 public:
  /// Normalizes g; throws DomainError if g is constant or a monomial of
  /// degree > 1 (those are never prime).
  explicit HeightOnePrime(const Poly& g);

  const Poly& generator() const noexcept { return gen_; }
  const ContextPtr& context() const noexcept { return gen_.context(); }

  bool operator==(const HeightOnePrime& other) const { return gen_ == other.gen_; }
  std::strong_ordering operator<=>(const HeightOnePrime& other) const {
    return canonical_compare(gen_, other.gen_);
  }

 private:
  Poly gen_;
};

/// "(x)", "(x + y + z)".
std::string to_string(const HeightOnePrime& p);

/// Order of vanishing of f along p. Throws DomainError for f = 0, which has
/// no factored form in the first place, so this never fails on valid input.
int valuation(const HeightOnePrime& p, const FracElement& f);
inline int valuation(const HeightOnePrime& p, const FactoredElement& f) {
  return valuation(p, f.as_fraction());
}

/// The height-one primes through u and/or v with their orders:
/// n = ord_p(u), m = ord_p(v) on common primes; s = ord(u) on primes only
/// through u; t = ord(v) on primes only through v.
struct SupportPartition {
  struct Common {
    HeightOnePrime prime;
    int n;
    int m;
  };
  struct Single {
    HeightOnePrime prime;
    int order;
  };
  std::vector<Common> both;
  std::vector<Single> only_u;
  std::vector<Single> only_v;
};

SupportPartition support_partition(const FactoredElement& u, const FactoredElement& v);

/// Rational-equivalence certificate: for each common prime p_i a pair
/// a_i, b_i outside p_i with a_i / b_i = v^{n_i} / u^{m_i}.
struct WitnessEntry {
  HeightOnePrime prime;
  FactoredElement a;
  FactoredElement b;
};

struct Witness {
  std::vector<WitnessEntry> entries;
};

/// In a UFD the reduced fraction v^{n_i} / u^{m_i} already avoids p_i.
Witness make_witness(const FactoredElement& u, const FactoredElement& v);

/// Multiplies every a_i and b_i by c. c must not lie in any p_i.
Witness perturb_witness(const Witness& w, const FactoredElement& c);

/// Checks ord_p(a) = ord_p(b) = 0 and a * u^m = b * v^n as expanded
/// polynomials for every entry.
bool witness_is_sound(const Witness& w, const FactoredElement& u, const FactoredElement& v);

/// Common primes ordered so that n_1/m_1 >= n_2/m_2 >= ... (ties keep the
/// canonical prime order), alpha_j = n_1 m_j - m_1 n_j, and the length G of
/// the leading tie block.
struct AlphaSequence {
  std::vector<SupportPartition::Common> ordered;
  std::vector<std::int64_t> alpha;
  std::size_t tie_block;
};

/// Throws PreconditionError when part.both is empty.
AlphaSequence alpha_sequence(const SupportPartition& part);

}  // namespace chow
