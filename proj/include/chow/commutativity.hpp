#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chow/cycle.hpp"
#include "chow/factored.hpp"
#include "chow/primes.hpp"

namespace chow {

/// (u) ∩ (v) ∩ alpha, i.e. cap(u, cap(v, alpha)).
Cycle cap_cap(const Setting& s, const FactoredElement& u, const FactoredElement& v, const Cycle& alpha);

/// (u)∩(v)∩[A] - (v)∩(u)∩[A].
Cycle commutator(const Setting& s, const FactoredElement& u, const FactoredElement& v);
/// The same on an arbitrary cycle alpha.
Cycle commutator_on(const Setting& s, const FactoredElement& u, const FactoredElement& v, const Cycle& alpha);

/// Both sides of the commutator formula with the witness that produced the
/// right-hand side.
struct CommutatorReport {
  Cycle uv;   // (u)∩(v)∩alpha
  Cycle vu;   // (v)∩(u)∩alpha
  Cycle lhs;  // uv - vu
  Cycle rhs;  // sum of the breakdown
  Witness witness;
  std::vector<std::pair<HeightOnePrime, Cycle>> breakdown;  // div(p_i, a_i/b_i)
  bool equal = false;
};

/// Witness from make_witness.
CommutatorReport verify_commutator_formula(const Setting& s, const FactoredElement& u, const FactoredElement& v);
/// Caller-supplied witness; throws PreconditionError unless it has one
/// sound entry per common prime.
CommutatorReport verify_commutator_formula(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                                 const Witness& w);
/// alpha = [A/p] for p the zero ideal or a variable x_k (monomial setting,
/// u and v monomials avoiding p). The witness primes become (x_k, x_j).
CommutatorReport verify_commutator_formula_on_prime(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                                          const PrimeRep& p);

/// Coefficient of [A/m] on both sides of the commutator formula after localizing at a
/// height-two coordinate prime m.
struct LocalCoefficientReport {
  PrimeRep m;
  std::int64_t v_side = 0;  // sum t_l l(A_m/(q_l, u))
  std::int64_t u_side = 0;  // sum s_k l(A_m/(q'_k, v))
  std::int64_t rhs = 0;     // coefficient of [A/m] in sum div(p_i, a_i/b_i)
  bool holds = false;
};
/// Monomial setting only; m must have height 2.
LocalCoefficientReport verify_local_coefficient(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                         const CoordinatePrime& m);
/// verify_local_coefficient at every height-two coordinate prime.
std::vector<LocalCoefficientReport> verify_local_coefficients(const Setting& s, const FactoredElement& u, const FactoredElement& v);

/// lhs = commutator (or its (b, a) analogue), rhs = the closed form, with
/// the pair a, b used.
struct PairReport {
  Cycle lhs;
  Cycle rhs;
  FactoredElement a;
  FactoredElement b;
  bool holds = false;
};

/// n_i = m_i for all i: commutator = sum div(p_i, a^{n_i} / b^{n_i}) with
/// a / b = v / u. Throws PreconditionError when some n_i != m_i.
PairReport verify_equal_orders(const Setting& s, const FactoredElement& u, const FactoredElement& v);

/// Exactly one common prime p: commutator = div(p, a / b) with
/// a / b = v^n / u^m. Throws PreconditionError otherwise.
PairReport verify_single_prime(const Setting& s, const FactoredElement& u, const FactoredElement& v);

/// Equal orders; a' = a * prod J_h^{l_h}, b' = b * prod J_h^{l_h} with
/// a / b = v / u. Checks (b')∩(a')∩[A] - (a')∩(b')∩[A] against
/// sum div(J_h, v^{l_h} / u^{l_h}). Throws PreconditionError when a J_h
/// divides u, v, a or b, or the orders differ.
PairReport verify_ab_swap(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                          const std::vector<Factor>& perturbation);

/// The three-term decomposition for U = u^{m_1}, V = v^{n_1} and the pair
/// a_1, b_1 = U a_1 / V, plus the identities used to evaluate each term.
struct ThreeTermReport {
  AlphaSequence order;
  FactoredElement a1;
  FactoredElement b1;
  Cycle lhs;            // (U)∩(V)∩[A] - (V)∩(U)∩[A]
  Cycle t1;             // (U)∩(a1)∩[A] - (a1)∩(U)∩[A]
  Cycle t2;             // (b1)∩(V)∩[A] - (V)∩(b1)∩[A]
  Cycle t3;             // (a1)∩(V)∩[A] - (b1)∩(U)∩[A]
  Cycle swap_lhs;        // (b1)∩(a1)∩[A] - (a1)∩(b1)∩[A]
  Cycle cross_lhs;        // (V)∩(a1)∩[A] - (U)∩(b1)∩[A]
  Cycle j_rhs;          // sum div(J_h, v^{n1 l_h} / u^{m1 l_h})
  Cycle induction_rhs;  // m_1 sum_{j>G} div(p_j, a1^{n_j} / u^{alpha_j})
  Cycle final_rhs;      // m_1 n_1 sum div(p_i, a_i / b_i)
  bool three_terms = false;
  bool t2_zero = false;
  bool swap_identity = false;
  bool cross_identity = false;
  bool induction = false;
  bool final_identity = false;

  bool holds() const { return three_terms && t2_zero && swap_identity && cross_identity && induction && final_identity; }
};

/// Needs r >= 2 common primes and distinct ratios (G < r); throws
/// PreconditionError otherwise. The optional perturbation multiplies a_1
/// and b_1 by prod J_h^{l_h}.
ThreeTermReport verify_three_term_decomposition(const Setting& s, const FactoredElement& u, const FactoredElement& v,
                             const std::vector<Factor>& perturbation = {});

/// l(A/(v', u)) = sum t_l l(A/(q_l, u)) and l(A/(u', v)) = sum s_k l(A/(q'_k, v))
/// at one height-two coordinate prime, where g = prod p_i^{n_i}, v = g v',
/// u = g u'.
struct PrincipalLengthEntry {
  PrimeRep m;
  std::int64_t v_quotient = 0;  // l(A_m/(v', u))
  std::int64_t v_sum = 0;       // sum t_l l(A_m/(q_l, u))
  std::int64_t u_quotient = 0;  // l(A_m/(u', v))
  std::int64_t u_sum = 0;       // sum s_k l(A_m/(q'_k, v))
};
struct PrincipalLengthReport {
  FactoredElement g;
  FactoredElement v_prime;
  FactoredElement u_prime;
  std::vector<PrincipalLengthEntry> entries;
  bool holds = false;
};
/// Monomial setting, equal orders; throws PreconditionError otherwise.
PrincipalLengthReport verify_principal_length(const Setting& s, const FactoredElement& u,
                                                const FactoredElement& v);

}  // namespace chow
