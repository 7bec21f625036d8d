#include "chow/report.hpp"

#include <sstream>

#include "chow/errors.hpp"
#include "chow/text.hpp"

namespace chow {

void Emitter::field(std::string_view label, std::string_view key, std::string_view value) {
  if (format_ == Format::text) {
    out_ << label << " = " << value << '\n';
  } else {
    out_ << key << '\t' << value << '\n';
  }
}

std::string element_label(const FactoredElement& e) {
  bool compact = e.unit() == 1 && !e.factors().empty();
  for (const auto& f : e.factors()) {
    auto v = f.poly.as_variable();
    compact = compact && v && e.context()->name(*v).size() == 1 && f.exponent == 1;
  }
  if (!compact) return to_string(e);
  std::string out;
  for (const auto& f : e.factors()) out += e.context()->name(*f.poly.as_variable());
  return out;
}

std::string quotient_label(const FactoredElement& a, const FactoredElement& b) {
  if (b.is_unit() && b.unit() == 1) return to_string(a);
  std::string den = to_string(b);
  bool wrap = b.factors().size() + (b.unit() != 1 ? 1 : 0) > 1;
  return to_string(a) + "/" + (wrap ? "(" + den + ")" : den);
}

namespace {

std::string cap_label(const std::string& first, const std::string& second) {
  return "(" + first + ")∩(" + second + ")∩[A]";
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

void emit_cap_pair(Emitter& e, const std::string& ul, const std::string& vl, const Cycle& uv, const Cycle& vu) {
  e.field(cap_label(ul, vl), "uv", to_string(uv));
  e.field(cap_label(vl, ul), "vu", to_string(vu));
  e.field("difference", to_string(uv - vu));
}

void emit_witness(Emitter& e, const Witness& w) {
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    const auto& en = w.entries[i];
    e.field("witness " + to_string(en.prime), "witness." + idx(i),
            to_string(en.prime) + " " + quotient_label(en.a, en.b));
  }
}

void emit_commutator(Emitter& e, const std::string& ul, const std::string& vl, const CommutatorReport& r) {
  emit_cap_pair(e, ul, vl, r.uv, r.vu);
  if (e.format() == Emitter::Format::kv) emit_witness(e, r.witness);
  for (std::size_t i = 0; i < r.breakdown.size(); ++i) {
    const auto& en = r.witness.entries[i];
    e.field("div(" + to_string(en.prime) + ", " + quotient_label(en.a, en.b) + ")", "div." + idx(i),
            to_string(r.breakdown[i].second));
  }
  e.field("witness sum", "rhs", to_string(r.rhs));
  e.flag("equal", "equal", r.equal);
}

void emit_local_coefficient(Emitter& e, const LocalCoefficientReport& r) {
  const std::string m = to_string(r.m);
  std::ostringstream value;
  value << r.v_side << " - " << r.u_side << " = " << (r.v_side - r.u_side) << " vs " << r.rhs;
  if (e.format() == Emitter::Format::text) {
    e.field("at [" + m + "]", value.str() + (r.holds ? " ok" : " MISMATCH"));
  } else {
    e.field("local." + m + ".v_side", std::to_string(r.v_side));
    e.field("local." + m + ".u_side", std::to_string(r.u_side));
    e.field("local." + m + ".rhs", std::to_string(r.rhs));
    e.flag("", "local." + m + ".holds", r.holds);
  }
}

void emit_pair(Emitter& e, const std::string& name, const PairReport& r) {
  e.field("a", to_string(r.a));
  e.field("b", to_string(r.b));
  e.field(name + " lhs", "lhs", to_string(r.lhs));
  e.field(name + " rhs", "rhs", to_string(r.rhs));
  e.flag("equal", "equal", r.holds);
}

void emit_three_term(Emitter& e, const ThreeTermReport& r) {
  std::string order;
  std::string alpha;
  for (std::size_t i = 0; i < r.order.ordered.size(); ++i) {
    order += (i ? ", " : "") + to_string(r.order.ordered[i].prime);
    alpha += (i ? "," : "") + std::to_string(r.order.alpha[i]);
  }
  e.field("order", order);
  e.field("alpha", "(" + alpha + ")");
  e.field("G", std::to_string(r.order.tie_block));
  e.field("a1", to_string(r.a1));
  e.field("b1", to_string(r.b1));
  e.field("lhs", to_string(r.lhs));
  e.field("term1", to_string(r.t1));
  e.field("term2", to_string(r.t2));
  e.field("term3", to_string(r.t3));
  e.field("(b1)∩(a1) - (a1)∩(b1)", "swap_lhs", to_string(r.swap_lhs));
  e.field("(V)∩(a1) - (U)∩(b1)", "cross_lhs", to_string(r.cross_lhs));
  e.field("sum div(J, v^n1/u^m1)", "j_rhs", to_string(r.j_rhs));
  e.field("m1 sum div(p_j, a1^n_j/u^alpha_j)", "induction_rhs", to_string(r.induction_rhs));
  e.field("m1 n1 witness sum", "final_rhs", to_string(r.final_rhs));
  e.flag("lhs = term1 + term2 + term3", "three_terms", r.three_terms);
  e.flag("term2 = 0", "term2_zero", r.t2_zero);
  e.flag("swap identity", "swap_identity", r.swap_identity);
  e.flag("cross identity", "cross_identity", r.cross_identity);
  e.flag("term1 identity", "induction", r.induction);
  e.flag("lhs = m1 n1 witness sum", "final", r.final_identity);
  e.flag("equal", "equal", r.holds());
}

void emit_principal_length(Emitter& e, const PrincipalLengthReport& r) {
  e.field("g", to_string(r.g));
  e.field("v'", "v_prime", to_string(r.v_prime));
  e.field("u'", "u_prime", to_string(r.u_prime));
  for (const auto& en : r.entries) {
    const std::string m = to_string(en.m);
    if (e.format() == Emitter::Format::text) {
      std::ostringstream value;
      value << en.v_quotient << " vs " << en.v_sum << ", " << en.u_quotient << " vs " << en.u_sum;
      e.field("at [" + m + "]", value.str());
    } else {
      e.field("principal." + m + ".v", std::to_string(en.v_quotient) + " " + std::to_string(en.v_sum));
      e.field("principal." + m + ".u", std::to_string(en.u_quotient) + " " + std::to_string(en.u_sum));
    }
  }
  e.flag("equal", "equal", r.holds);
}

void emit_tame(Emitter& e, const TameOutput& t, const Cycle& composed) {
  for (const auto& en : t.entries) {
    e.field(to_string(en.prime), "tame." + to_string(en.prime), to_string(en.residue));
  }
  e.field("div of residues", "gersten", to_string(composed));
  e.flag("zero", "zero", composed.is_zero());
}

void emit_chi(Emitter& e, const ChiReport& r) {
  e.field("l(M/xM)", "quotient_length", to_string(r.quotient_length));
  e.field("l(_xM)", "kernel_length", to_string(r.kernel_length));
  e.field("rank(M)", "rank", std::to_string(r.rank));
  e.field("l(A/xA)", "order_x", std::to_string(r.order_x));
  e.flag("equal", "equal", r.holds);
}

void emit_det_length(Emitter& e, const DetLengthReport& r) {
  e.field("det", to_string(r.det));
  e.field("l(Coker)", "coker_length", to_string(r.coker_length));
  e.field("l(A/aA)", "order_a", std::to_string(r.order_a));
  e.field("l(A/bA)", "order_b", std::to_string(r.order_b));
  e.flag("equal", "equal", r.holds);
}

// ---------------------------------------------------------------------------

std::string render_example_xz_xy() {
  auto ctx = make_context("x,y,z");
  auto s = Setting::monomial(ctx);
  auto u = parse_factored("x*z", ctx);
  auto v = parse_factored("x*y", ctx);
  std::ostringstream out;
  Emitter e(out, Emitter::Format::text);
  emit_commutator(e, element_label(u), element_label(v), verify_commutator_formula(s, u, v));
  return out.str();
}

std::string render_example_five_var() {
  auto ctx = make_context("x,w,rho,y,z");
  auto s = Setting::monomial(ctx);
  auto u = parse_factored("x^2*w^3*rho*z^2", ctx);
  auto v = parse_factored("x^4*w^6*rho^3*y", ctx);
  std::ostringstream out;
  Emitter e(out, Emitter::Format::text);
  e.field("u", to_string(u));
  e.field("v", to_string(v));
  CommutatorReport r = verify_commutator_formula(s, u, v);
  emit_cap_pair(e, "u", "v", r.uv, r.vu);

  // The same difference written with the primes' own variables dropped from
  // the witnesses.
  const char* short_forms[][2] = {{"x", "y^2/z^8"}, {"w", "y^3/z^12"}, {"rho", "y/z^6"}};
  std::string label;
  Cycle shortened(ctx, 3);
  for (const auto& [prime, frac] : short_forms) {
    auto p = PrimeRep::from_generator(parse_poly(prime, ctx));
    label += std::string(label.empty() ? "" : " + ") + "div((" + prime + "), " + frac + ")";
    shortened += div_frac(s, p, parse_frac(frac, ctx));
  }
  e.field(label, to_string(shortened));

  AlphaSequence order = alpha_sequence(support_partition(u, v));
  std::string alpha;
  std::string sum_label;
  for (std::size_t i = 0; i < order.ordered.size(); ++i) {
    const auto& c = order.ordered[i];
    const WitnessEntry* w = nullptr;
    for (const auto& en : r.witness.entries) {
      if (en.prime == c.prime) w = &en;
    }
    const std::string k = std::to_string(i + 1);
    e.field(to_string(c.prime), "n = " + std::to_string(c.n) + ", m = " + std::to_string(c.m) + ", a" + k +
                                    " = " + to_string(w->a) + ", b" + k + " = " + to_string(w->b));
    alpha += (i ? "," : "") + std::to_string(order.alpha[i]);
  }
  e.field("alpha", "(" + alpha + ")");
  e.field("G", std::to_string(order.tie_block));
  for (std::size_t i = 0; i < order.ordered.size(); ++i) {
    const auto& c = order.ordered[i];
    for (std::size_t j = 0; j < r.witness.entries.size(); ++j) {
      if (r.witness.entries[j].prime != c.prime) continue;
      const std::string k = std::to_string(i + 1);
      e.field("div(" + to_string(c.prime) + ", a" + k + "/b" + k + ")", to_string(r.breakdown[j].second));
    }
  }
  e.field("witness sum", to_string(r.rhs));
  e.flag("equal", "equal", r.equal && shortened == r.lhs);
  ThreeTermReport t = verify_three_term_decomposition(s, u, v);
  e.flag("three-term decomposition", "three_term", t.holds() && t.j_rhs.is_zero());
  return out.str();
}

std::string_view golden_example_xz_xy() {
  return "(xz)∩(xy)∩[A] = 1*[A/(x,y)] + 1*[A/(y,z)]\n"
         "(xy)∩(xz)∩[A] = 1*[A/(x,z)] + 1*[A/(y,z)]\n"
         "difference = 1*[A/(x,y)] - 1*[A/(x,z)]\n"
         "div((x), y/z) = 1*[A/(x,y)] - 1*[A/(x,z)]\n"
         "witness sum = 1*[A/(x,y)] - 1*[A/(x,z)]\n"
         "equal = true\n";
}

std::string_view golden_example_five_var() {
  return "u = x^2*w^3*rho*z^2\n"
         "v = x^4*w^6*rho^3*y\n"
         "(u)∩(v)∩[A] = 2*[A/(x,y)] + 3*[A/(w,y)] + 1*[A/(rho,y)] + 2*[A/(y,z)]\n"
         "(v)∩(u)∩[A] = 8*[A/(x,z)] + 12*[A/(w,z)] + 6*[A/(rho,z)] + 2*[A/(y,z)]\n"
         "difference = 2*[A/(x,y)] - 8*[A/(x,z)] + 3*[A/(w,y)] - 12*[A/(w,z)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]\n"
         "div((x), y^2/z^8) + div((w), y^3/z^12) + div((rho), y/z^6) = "
         "2*[A/(x,y)] - 8*[A/(x,z)] + 3*[A/(w,y)] - 12*[A/(w,z)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]\n"
         "(x) = n = 2, m = 4, a1 = rho^2*y^2, b1 = z^8\n"
         "(w) = n = 3, m = 6, a2 = rho^3*y^3, b2 = z^12\n"
         "(rho) = n = 1, m = 3, a3 = y, b3 = x^2*w^3*z^6\n"
         "alpha = (0,0,2)\n"
         "G = 2\n"
         "div((x), a1/b1) = 2*[A/(x,rho)] + 2*[A/(x,y)] - 8*[A/(x,z)]\n"
         "div((w), a2/b2) = 3*[A/(w,rho)] + 3*[A/(w,y)] - 12*[A/(w,z)]\n"
         "div((rho), a3/b3) = -2*[A/(x,rho)] - 3*[A/(w,rho)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]\n"
         "witness sum = 2*[A/(x,y)] - 8*[A/(x,z)] + 3*[A/(w,y)] - 12*[A/(w,z)] + 1*[A/(rho,y)] - 6*[A/(rho,z)]\n"
         "equal = true\n"
         "three-term decomposition = true\n";
}

}  // namespace chow
