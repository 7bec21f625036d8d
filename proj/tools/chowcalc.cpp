// chowcalc: cycles, lengths and commutator identities from the command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chow/commutativity.hpp"
#include "chow/errors.hpp"
#include "chow/generators.hpp"
#include "chow/report.hpp"
#include "chow/tame.hpp"
#include "chow/text.hpp"

using namespace chow;

namespace {

enum Exit { ok = 0, failed = 1, unsupported = 2, bad_input = 3 };

struct Options {
  std::string format = "text";
  std::string vars;
  std::string setting = "monomial";
  std::string u;
  std::string v;
  bool batch = false;
  std::string check = "formula";
  std::string perturb;
  // length
  std::string prime;
  std::string gens;
  std::string point = "0,0";
  std::string f;
  std::string g;
  std::string matrix;
  std::string chi;
  std::string det;
  // tame
  std::string alpha;
  std::string beta;
  // example
  std::string example;
  // fuzz
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string kind = "formula";
  unsigned jobs = 1;
};

Emitter::Format format_of(const Options& o) {
  return o.format == "kv" ? Emitter::Format::kv : Emitter::Format::text;
}

ContextPtr context_of(const Options& o, const std::string& fallback) {
  if (!o.vars.empty()) return make_context(o.vars);
  if (const char* env = std::getenv("CHOW_VARS"); env && *env) return make_context(std::string(env));
  return make_context(fallback);
}

Setting setting_of(const Options& o, const ContextPtr& ctx) {
  if (o.setting == "plane") return Setting::plane(ctx);
  if (o.setting == "monomial") return Setting::monomial(ctx);
  throw UnsupportedSetting("setting '" + o.setting + "' does not apply to this command");
}

std::vector<Factor> parse_perturbation(const std::string& text, const ContextPtr& ctx) {
  // "J:l;J:l"
  std::vector<Factor> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.rfind(':');
    int l = 1;
    if (colon != std::string::npos) {
      l = std::stoi(item.substr(colon + 1));
      item = item.substr(0, colon);
    }
    out.push_back({parse_poly(item, ctx), l});
  }
  return out;
}

// ---------------------------------------------------------------------------

int run_pair(const Options& o, const ContextPtr& ctx, const std::string& cmd, const std::string& u_text,
             const std::string& v_text) {
  const Setting s = setting_of(o, ctx);
  const FactoredElement u = parse_factored(u_text, ctx);
  const FactoredElement v = parse_factored(v_text, ctx);
  Emitter e(std::cout, format_of(o));
  const std::string ul = element_label(u);
  const std::string vl = element_label(v);

  if (cmd == "commutator") {
    emit_cap_pair(e, ul, vl, cap_cap(s, u, v, Cycle::fundamental(ctx)), cap_cap(s, v, u, Cycle::fundamental(ctx)));
    return ok;
  }
  if (cmd == "witness") {
    emit_witness(e, make_witness(u, v));
    return ok;
  }

  bool pass = true;
  const bool all = o.check == "all";
  if (all || o.check == "formula") {
    auto r = verify_commutator_formula(s, u, v);
    emit_commutator(e, ul, vl, r);
    pass = pass && r.equal;
  }
  if (all || o.check == "local") {
    if (s.backend() != Setting::Backend::monomial) throw UnsupportedSetting("local coefficients need the monomial setting");
    for (const auto& r : verify_local_coefficients(s, u, v)) {
      emit_local_coefficient(e, r);
      pass = pass && r.holds;
    }
  }
  if (o.check == "equal-orders") {
    auto r = verify_equal_orders(s, u, v);
    emit_pair(e, "commutator", r);
    pass = pass && r.holds;
  }
  if (o.check == "single-prime") {
    auto r = verify_single_prime(s, u, v);
    emit_pair(e, "commutator", r);
    pass = pass && r.holds;
  }
  if (o.check == "swap") {
    auto r = verify_ab_swap(s, u, v, parse_perturbation(o.perturb, ctx));
    emit_pair(e, "(b')∩(a')∩[A] - (a')∩(b')∩[A]", r);
    pass = pass && r.holds;
  }
  if (o.check == "three-term") {
    auto r = verify_three_term_decomposition(s, u, v, parse_perturbation(o.perturb, ctx));
    emit_three_term(e, r);
    pass = pass && r.holds();
  }
  if (o.check == "principal-length") {
    auto r = verify_principal_length(s, u, v);
    emit_principal_length(e, r);
    pass = pass && r.holds;
  }
  return pass ? ok : failed;
}

int run_pairs(const Options& o, const std::string& cmd) {
  const ContextPtr ctx = context_of(o, "x,y,z");
  if (!o.batch) {
    if (o.u.empty() || o.v.empty()) throw PreconditionError("-u and -v are required (or --stdin)");
    return run_pair(o, ctx, cmd, o.u, o.v);
  }
  // One "u ; v" pair per line; the worst status wins.
  int status = ok;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw PreconditionError("batch lines have the form 'u ; v'");
    std::cout << "# " << line << '\n';
    status = std::max(status, run_pair(o, ctx, cmd, line.substr(0, semi), line.substr(semi + 1)));
  }
  return status;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rat parse_rat(const std::string& text) {
  Rat r(text);
  r.canonicalize();
  return r;
}

PIDMatrix parse_matrix(const std::string& text, const ContextPtr& ctx) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& row : split(text, ';')) {
    rows.emplace_back();
    for (const auto& entry : split(row, ',')) rows.back().push_back(parse_poly(entry, ctx));
  }
  return PIDMatrix::from_rows(ctx, rows);
}

int run_length(const Options& o) {
  Emitter e(std::cout, format_of(o));
  if (o.setting == "monomial") {
    const ContextPtr ctx = context_of(o, "x,y,z");
    std::vector<std::size_t> vars;
    for (const auto& name : split(o.prime, ',')) {
      auto idx = ctx->index_of(name);
      if (!idx) throw PreconditionError("unknown variable '" + name + "' in --prime");
      vars.push_back(*idx);
    }
    std::vector<FactoredElement> gens;
    for (const auto& gtext : split(o.gens, ';')) gens.push_back(parse_factored(gtext, ctx));
    e.field("length", to_string(coord_local_length(CoordinatePrime(ctx, vars), gens)));
    return ok;
  }
  if (o.setting == "plane") {
    const ContextPtr ctx = context_of(o, "x,y");
    const auto xy = split(o.point, ',');
    if (xy.size() != 2) throw PreconditionError("--point takes 'a,b'");
    e.field("length", to_string(plane_mult(PointPrime{parse_rat(xy[0]), parse_rat(xy[1])}, parse_poly(o.f, ctx),
                                           parse_poly(o.g, ctx))));
    return ok;
  }
  if (o.setting == "pid") {
    const ContextPtr ctx = make_context("t");
    const PIDMatrix m = parse_matrix(o.matrix, ctx);
    if (!o.chi.empty()) {
      auto r = check_chi(m, parse_poly(o.chi, ctx));
      emit_chi(e, r);
      return r.holds ? ok : failed;
    }
    if (!o.det.empty()) {
      const auto slash = o.det.find('/');
      const Poly a = parse_poly(o.det.substr(0, slash), ctx);
      const Poly b = slash == std::string::npos ? Poly::constant(ctx, Rat(1)) : parse_poly(o.det.substr(slash + 1), ctx);
      auto r = check_det_length(m, a, b);
      emit_det_length(e, r);
      return r.holds ? ok : failed;
    }
    e.field("length", to_string(pid_coker_length(m)));
    return ok;
  }
  throw UnsupportedSetting("unknown setting '" + o.setting + "'");
}

int run_tame(const Options& o) {
  const ContextPtr ctx = context_of(o, "x,y,z");
  const FracElement a = parse_frac(o.alpha, ctx);
  const FracElement b = parse_frac(o.beta, ctx);
  Emitter e(std::cout, format_of(o));
  const Cycle composed = gersten_compose(a, b);
  emit_tame(e, tame(a, b), composed);
  return composed.is_zero() ? ok : failed;
}

int run_example(const Options& o) {
  std::string out;
  std::string_view expected;
  if (o.example == "xz-xy") {
    out = render_example_xz_xy();
    expected = golden_example_xz_xy();
  } else if (o.example == "five-var") {
    out = render_example_five_var();
    expected = golden_example_five_var();
  } else {
    throw PreconditionError("unknown example '" + o.example + "' (xz-xy, five-var)");
  }
  std::cout << out;
  return out == expected ? ok : failed;
}

// ---------------------------------------------------------------------------
// fuzz

enum class Outcome { pass, fail, unsupported };

struct InstanceResult {
  Outcome outcome = Outcome::pass;
  std::string detail;
};

InstanceResult fuzz_one(const std::string& kind, std::uint64_t seed, std::uint64_t index) {
  gen::Rng rng(gen::instance_seed(seed, index));
  InstanceResult res;
  auto describe = [](const FactoredElement& u, const FactoredElement& v) {
    return "u = " + to_string(u) + ", v = " + to_string(v);
  };
  try {
    if (kind == "formula" || kind == "coprime" || kind == "three-term") {
      const auto ctx = gen::pool_context(static_cast<std::size_t>(kind == "three-term" ? rng.uniform(2, 6) : rng.uniform(1, 6)));
      const auto s = Setting::monomial(ctx);
      auto [u, v] = kind == "formula"   ? gen::random_monomial_pair(rng, ctx)
                    : kind == "coprime" ? gen::random_coprime_pair(rng, ctx)
                                        : gen::random_multi_ratio_pair(rng, ctx);
      res.detail = describe(u, v);
      bool pass;
      if (kind == "formula") {
        pass = verify_commutator_formula(s, u, v).equal;
      } else if (kind == "coprime") {
        pass = commutator(s, u, v).is_zero() && make_witness(u, v).entries.empty();
      } else {
        pass = verify_three_term_decomposition(s, u, v).holds();
      }
      res.outcome = pass ? Outcome::pass : Outcome::fail;
    } else if (kind == "plane") {
      const auto ctx = gen::pool_context(2);
      auto [u, v] = gen::random_plane_pair(rng, ctx);
      res.detail = describe(u, v);
      res.outcome = verify_commutator_formula(Setting::plane(ctx), u, v).equal ? Outcome::pass : Outcome::fail;
    } else if (kind == "pid") {
      const auto ctx = make_context("t");
      const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto cols = static_cast<std::size_t>(rng.uniform(0, 4));
      const PIDMatrix m = gen::random_pid_matrix(rng, ctx, rows, cols);
      const Poly x = gen::random_t_poly(rng, ctx);
      bool pass = check_chi(m, x).holds;
      const PIDMatrix sq = gen::random_pid_matrix(rng, ctx, rows, rows);
      if (!determinant(sq).is_zero()) {
        const Poly b = gen::random_t_poly(rng, ctx, 2);
        pass = pass && check_det_length(sq, determinant(sq) * b, b).holds;
      }
      res.detail = std::to_string(rows) + "x" + std::to_string(cols) + " matrix";
      res.outcome = pass ? Outcome::pass : Outcome::fail;
    } else if (kind == "gersten") {
      const auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(1, 5)));
      auto [a, b] = gen::random_tame_pair(rng, ctx);
      res.detail = "alpha = " + to_string(a) + ", beta = " + to_string(b);
      res.outcome = gersten_compose(a, b).is_zero() ? Outcome::pass : Outcome::fail;
    } else {
      throw PreconditionError("unknown fuzz kind '" + kind + "'");
    }
  } catch (const UnsupportedSetting& err) {
    res.outcome = Outcome::unsupported;
    res.detail += std::string(res.detail.empty() ? "" : ": ") + err.what();
  }
  return res;
}

int run_fuzz(const Options& o) {
  // Validate the kind up front so a typo is an input error, not N failures.
  fuzz_one(o.kind, o.seed, 0);
  std::vector<InstanceResult> results(o.count);
  const unsigned jobs = std::max(1u, o.jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < o.count; i += jobs) results[i] = fuzz_one(o.kind, o.seed, i);
    });
  }
  for (auto& t : workers) t.join();

  Emitter e(std::cout, format_of(o));
  std::size_t passed = 0, failures = 0, skipped = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (r.outcome == Outcome::pass) {
      ++passed;
      continue;
    }
    (r.outcome == Outcome::fail ? failures : skipped)++;
    e.field(std::string(r.outcome == Outcome::fail ? "FAIL " : "unsupported ") + std::to_string(i),
            std::string(r.outcome == Outcome::fail ? "fail." : "unsupported.") + std::to_string(i), r.detail);
  }
  e.field("kind", o.kind);
  e.field("seed", std::to_string(o.seed));
  e.field("instances", std::to_string(o.count));
  e.field("passed", std::to_string(passed));
  e.field("failed", std::to_string(failures));
  e.field("unsupported", std::to_string(skipped));
  return failures ? failed : ok;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Cycles, lengths and commutator identities over polynomial rings"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output: text or kv (key<TAB>value)")
      ->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--vars", o.vars, "Comma-separated variables (default $CHOW_VARS, then x,y,z)");

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--setting", o.setting, "monomial or plane")->check(CLI::IsMember({"monomial", "plane"}));
    sub->add_option("-u", o.u, "First element");
    sub->add_option("-v", o.v, "Second element");
    sub->add_flag("--stdin", o.batch, "Read 'u ; v' lines from standard input");
  };
  auto* commutator_cmd = app.add_subcommand("commutator", "(u)∩(v)∩[A], (v)∩(u)∩[A] and their difference");
  add_pair(commutator_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity between both sides");
  add_pair(verify_cmd);
  verify_cmd
      ->add_option("--check", o.check, "formula, local, equal-orders, single-prime, swap, three-term, principal-length, all")
      ->check(CLI::IsMember(
          {"formula", "local", "equal-orders", "single-prime", "swap", "three-term", "principal-length", "all"}));
  verify_cmd->add_option("--perturb", o.perturb, "Extra factors 'J:l;J:l' for swap and three-term");
  auto* witness_cmd = app.add_subcommand("witness", "Pairs a_i, b_i with a_i/b_i = v^n_i/u^m_i");
  add_pair(witness_cmd);

  auto* length_cmd = app.add_subcommand("length", "A single length");
  length_cmd->add_option("--setting", o.setting, "monomial, plane or pid")
      ->check(CLI::IsMember({"monomial", "plane", "pid"}));
  length_cmd->add_option("--prime", o.prime, "monomial: variables of the prime, e.g. x,y");
  length_cmd->add_option("--gens", o.gens, "monomial: generators separated by ';'");
  length_cmd->add_option("--point", o.point, "plane: point a,b");
  length_cmd->add_option("-f", o.f, "plane: first curve");
  length_cmd->add_option("-g", o.g, "plane: second curve");
  length_cmd->add_option("--matrix", o.matrix, "pid: rows separated by ';', entries by ','");
  length_cmd->add_option("--chi", o.chi, "pid: check chi(M) for this x");
  length_cmd->add_option("--det", o.det, "pid: check l(Coker) against a/b = det");

  auto* tame_cmd = app.add_subcommand("tame", "Tame symbol residues and their divisor");
  tame_cmd->add_option("--alpha", o.alpha)->required();
  tame_cmd->add_option("--beta", o.beta)->required();

  auto* example_cmd = app.add_subcommand("example", "Replay a worked example against its stored output");
  example_cmd->add_option("name", o.example, "xz-xy or five-var")->required();

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random instances");
  fuzz_cmd->add_option("--seed", o.seed);
  fuzz_cmd->add_option("--count", o.count);
  fuzz_cmd->add_option("--kind", o.kind, "formula, plane, pid, three-term, gersten, coprime");
  fuzz_cmd->add_option("--jobs", o.jobs, "Worker threads");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*commutator_cmd) return run_pairs(o, "commutator");
    if (*verify_cmd) return run_pairs(o, "verify");
    if (*witness_cmd) return run_pairs(o, "witness");
    if (*length_cmd) return run_length(o);
    if (*tame_cmd) return run_tame(o);
    if (*example_cmd) return run_example(o);
    if (*fuzz_cmd) return run_fuzz(o);
  } catch (const UnsupportedSetting& err) {
    std::cerr << "unsupported: " << err.what() << '\n';
    return unsupported;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return bad_input;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return bad_input;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return bad_input;
  }
  return bad_input;
}
