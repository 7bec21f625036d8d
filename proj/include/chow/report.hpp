#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "chow/commutativity.hpp"
#include "chow/length.hpp"
#include "chow/pid.hpp"
#include "chow/tame.hpp"

namespace chow {

/// Writes report fields either as "label = value" lines or as
/// "key<TAB>value" lines.
class Emitter {
 public:
  enum class Format { text, kv };

  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  Format format() const noexcept { return format_; }
  void field(std::string_view label, std::string_view key, std::string_view value);
  void field(std::string_view key, std::string_view value) { field(key, key, value); }
  void flag(std::string_view label, std::string_view key, bool value) {
    field(label, key, value ? "true" : "false");
  }

 private:
  std::ostream& out_;
  Format format_;
};

/// "xz" when every factor is a one-letter variable and the unit is 1,
/// otherwise the canonical text.
std::string element_label(const FactoredElement& e);
/// "a/b" with the denominator parenthesized when it has several factors.
std::string quotient_label(const FactoredElement& a, const FactoredElement& b);

void emit_cap_pair(Emitter& e, const std::string& ul, const std::string& vl, const Cycle& uv, const Cycle& vu);
void emit_commutator(Emitter& e, const std::string& ul, const std::string& vl, const CommutatorReport& r);
void emit_witness(Emitter& e, const Witness& w);
void emit_local_coefficient(Emitter& e, const LocalCoefficientReport& r);
void emit_pair(Emitter& e, const std::string& name, const PairReport& r);
void emit_three_term(Emitter& e, const ThreeTermReport& r);
void emit_principal_length(Emitter& e, const PrincipalLengthReport& r);
void emit_tame(Emitter& e, const TameOutput& t, const Cycle& composed);
void emit_chi(Emitter& e, const ChiReport& r);
void emit_det_length(Emitter& e, const DetLengthReport& r);

// Worked examples: u = xz, v = xy over Q[x,y,z], and
// u = x^2 w^3 rho z^2, v = x^4 w^6 rho^3 y over Q[x,w,rho,y,z].

/// Text rendering computed from scratch.
std::string render_example_xz_xy();
std::string render_example_five_var();

/// Expected renderings of the two worked examples, written out by hand.
std::string_view golden_example_xz_xy();
std::string_view golden_example_five_var();

}  // namespace chow
