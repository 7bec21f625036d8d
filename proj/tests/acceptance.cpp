// Acceptance run: one PASS/FAIL line per criterion, with instance counts and
// wall time against each limit. Exit status 0 only if every line passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "chow/commutativity.hpp"
#include "chow/errors.hpp"
#include "chow/generators.hpp"
#include "chow/pid.hpp"
#include "chow/report.hpp"
#include "chow/tame.hpp"
#include "chow/text.hpp"
#include "oracles.hpp"

using namespace chow;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool ok = o.pass && in_time;
  failures += ok ? 0 : 1;
  std::printf("criterion %d %s: %s (%.2fs / %.0fs)%s%s\n", id, name, ok ? "PASS" : "FAIL", secs, limit_s,
              o.detail.empty() ? "" : " ", o.detail.c_str());
  std::fflush(stdout);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const char* name) { return read_file(std::string(CHOW_GOLDEN_DIR) + "/" + name); }

// Checks a coordinate length event against brute-force enumeration.
bool staircase_agrees(const CoordinateLengthEvent& c) {
  auto exps = oracle::localized_exponents(c.prime.vars(), c.generators);
  if (!exps) return false;
  auto expected = oracle::brute_staircase(*exps, c.prime.vars().size());
  return c.result == (expected ? Length::finite(*expected) : Length::infinite());
}

Outcome example_xz_xy() {
  Outcome o;
  const std::string stored = golden("example_xz_xy.txt");
  const std::string out = render_example_xz_xy();
  o.require(out == stored, "render differs from stored golden");
  o.require(stored.find("(xz)∩(xy)∩[A] = 1*[A/(x,y)] + 1*[A/(y,z)]\n") != std::string::npos, "uv line");
  o.require(stored.find("(xy)∩(xz)∩[A] = 1*[A/(x,z)] + 1*[A/(y,z)]\n") != std::string::npos, "vu line");
  auto ctx = make_context("x,y,z");
  auto s = Setting::monomial(ctx);
  auto rep = verify_commutator_formula(s, parse_factored("x*z", ctx), parse_factored("x*y", ctx));
  o.require(rep.lhs == div_frac(s, PrimeRep::from_generator(parse_poly("x", ctx)), parse_frac("y/z", ctx)),
            "difference != div((x), y/z)");
  o.detail = o.pass ? "byte-identical" : o.detail;
  return o;
}

Outcome example_five_var() {
  Outcome o;
  o.require(render_example_five_var() == golden("example_five_var.txt"), "render differs from stored golden");
  auto ctx = make_context("x,w,rho,y,z");
  auto s = Setting::monomial(ctx);
  auto u = parse_factored("x^2*w^3*rho*z^2", ctx);
  auto v = parse_factored("x^4*w^6*rho^3*y", ctx);
  auto rep = verify_commutator_formula(s, u, v);
  o.require(to_string(rep.uv) == "2*[A/(x,y)] + 3*[A/(w,y)] + 1*[A/(rho,y)] + 2*[A/(y,z)]", "(u)(v)[A]");
  o.require(to_string(rep.vu) == "8*[A/(x,z)] + 12*[A/(w,z)] + 6*[A/(rho,z)] + 2*[A/(y,z)]", "(v)(u)[A]");
  const char* want[3][2] = {{"rho^2*y^2", "z^8"}, {"rho^3*y^3", "z^12"}, {"y", "x^2*w^3*z^6"}};
  for (std::size_t i = 0; i < 3; ++i) {
    o.require(to_string(rep.witness.entries.at(i).a) == want[i][0], "a" + std::to_string(i + 1));
    o.require(to_string(rep.witness.entries.at(i).b) == want[i][1], "b" + std::to_string(i + 1));
  }
  auto seq = alpha_sequence(support_partition(u, v));
  o.require(seq.alpha == std::vector<std::int64_t>{0, 0, 2}, "alpha");
  o.require(seq.tie_block == 2, "G");
  Cycle shortened = div_frac(s, PrimeRep::from_generator(parse_poly("x", ctx)), parse_frac("y^2/z^8", ctx)) +
                    div_frac(s, PrimeRep::from_generator(parse_poly("w", ctx)), parse_frac("y^3/z^12", ctx)) +
                    div_frac(s, PrimeRep::from_generator(parse_poly("rho", ctx)), parse_frac("y/z^6", ctx));
  o.require(shortened == rep.lhs && rep.rhs == rep.lhs, "the two witness sums and the difference");
  return o;
}

Outcome formula_suite() {
  Outcome o;
  std::size_t lengths = 0;
  const std::size_t count = 10000;
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1001, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(1, 6)));
    auto s = Setting::monomial(ctx, [&](const LengthEvent& ev) {
      ++lengths;
      o.require(staircase_agrees(std::get<CoordinateLengthEvent>(ev)), "length disagrees with enumeration");
    });
    auto [u, v] = gen::random_monomial_pair(rng, ctx, 5, 4);
    auto rep = verify_commutator_formula(s, u, v);
    o.require(rep.equal, "unequal at instance " + std::to_string(i));
    auto a = oracle::exponents(u.as_fraction());
    auto b = oracle::exponents(v.as_fraction());
    o.require(oracle::from_cycle(rep.lhs) == oracle::minus(oracle::cap_cap(a, b), oracle::cap_cap(b, a)),
              "lhs disagrees with closed form at instance " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(count) + " instances, " + std::to_string(lengths) + " lengths cross-checked";
  return o;
}

Outcome plane_suite() {
  Outcome o;
  auto ctx = gen::pool_context(2);
  std::size_t checked = 0;
  std::size_t events = 0;
  const std::size_t count = 500;
  auto s = Setting::plane(ctx, [&](const LengthEvent& ev) {
    ++events;
    if (const auto* c = std::get_if<CoordinateLengthEvent>(&ev)) {
      o.require(staircase_agrees(*c), "length disagrees with enumeration");
      return;
    }
    const auto& p = std::get<PlaneLengthEvent>(ev);
    auto pts = common_rational_points(p.f, p.g);
    int same_line = 0;
    for (const auto& q : pts) same_line += q.x == p.point.x;
    if (same_line != 1) return;
    if (oracle::lc_y_at(p.f, p.point.x) == 0 && oracle::lc_y_at(p.g, p.point.x) == 0) return;
    ++checked;
    o.require(p.result == Length::finite(oracle::resultant_order(p.f, p.g, p.point.x)),
              "plane_mult disagrees with resultant order for " + to_string(p.f) + " ; " + to_string(p.g));
  });
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1002, i));
    auto [u, v] = gen::random_plane_pair(rng, ctx);
    o.require(verify_commutator_formula(s, u, v).equal, "unequal at instance " + std::to_string(i));
  }
  if (o.pass) {
    o.detail = std::to_string(count) + " instances, " + std::to_string(checked) + " of " + std::to_string(events) +
               " multiplicities checked by resultant order";
  }
  return o;
}

Outcome pid_suite() {
  Outcome o;
  auto t = make_context("t");
  const std::size_t count = 1000;
  std::size_t det_checks = 0;
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1003, i));
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(0, 4));
    PIDMatrix m = gen::random_pid_matrix(rng, t, rows, cols, 4);
    const Poly x = gen::random_t_poly(rng, t, 4);
    auto chi = check_chi(m, x);
    o.require(chi.holds, "chi identity fails at instance " + std::to_string(i));
    // Independent shape from minors.
    std::vector<std::vector<Poly>> entries(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) entries[r].push_back(m.at(r, c));
    }
    auto shape = oracle::module_shape(entries, cols, t);
    const int ox = oracle::order_t(x);
    std::int64_t kernel = 0;
    for (int e : shape.torsion) kernel += std::min(e, ox);
    o.require(chi.rank == shape.free_rank, "rank at instance " + std::to_string(i));
    o.require(chi.kernel_length == Length::finite(kernel), "kernel length at instance " + std::to_string(i));
    o.require(chi.quotient_length == Length::finite(kernel + ox * static_cast<std::int64_t>(shape.free_rank)),
              "quotient length at instance " + std::to_string(i));

    PIDMatrix phi = gen::random_pid_matrix(rng, t, rows, rows, 4);
    std::vector<std::vector<Poly>> square(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < rows; ++c) square[r].push_back(phi.at(r, c));
    }
    const Poly det = oracle::cofactor_det(square, t);
    if (det.is_zero()) continue;
    const Poly b = gen::random_t_poly(rng, t, 3);
    auto dl = check_det_length(phi, det * b, b);
    o.require(dl.holds, "det-length identity fails at instance " + std::to_string(i));
    o.require(dl.coker_length == Length::finite(oracle::order_t(det)), "coker length vs det order");
    ++det_checks;
  }
  if (o.pass) o.detail = std::to_string(count) + " chi instances, " + std::to_string(det_checks) + " det instances";
  return o;
}

Outcome three_term_suite() {
  Outcome o;
  const std::size_t count = 1000;
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1004, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(2, 6)));
    auto s = Setting::monomial(ctx);
    auto [u, v] = gen::random_multi_ratio_pair(rng, ctx, 5);
    auto rep = verify_three_term_decomposition(s, u, v);
    o.require(rep.holds(), "fails at instance " + std::to_string(i) + ": u = " + to_string(u) + ", v = " + to_string(v));
  }
  auto ctx = make_context("x,w,rho,y,z");
  auto five = verify_three_term_decomposition(Setting::monomial(ctx), parse_factored("x^2*w^3*rho*z^2", ctx),
                                              parse_factored("x^4*w^6*rho^3*y", ctx));
  o.require(five.holds() && five.j_rhs.is_zero() && five.swap_lhs.is_zero() && five.cross_lhs.is_zero(),
            "five-variable instance");
  if (o.pass) o.detail = std::to_string(count) + " instances + five-variable instance with no extra primes";
  return o;
}

Outcome gersten_suite() {
  Outcome o;
  const std::size_t count = 5000;
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1005, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(1, 5)));
    auto [a, b] = gen::random_tame_pair(rng, ctx);
    o.require(gersten_compose(a, b).is_zero(), "nonzero at instance " + std::to_string(i));
  }
  auto ctx = make_context("x,y");
  auto s = Setting::monomial(ctx);
  auto t = tame(parse_frac("x", ctx), parse_frac("y", ctx));
  o.require(t.entries.size() == 2 && to_string(t.entries[0].residue) == "1/y" && to_string(t.entries[1].residue) == "x",
            "residues of {x, y}");
  Cycle at_x = div_frac(s, PrimeRep::from_generator(parse_poly("x", ctx)), t.entries[0].residue);
  Cycle at_y = div_frac(s, PrimeRep::from_generator(parse_poly("y", ctx)), t.entries[1].residue);
  o.require(to_string(at_x) == "-1*[A/(x,y)]" && to_string(at_y) == "1*[A/(x,y)]", "two-term values");
  o.require((at_x + at_y).is_zero(), "two-term cancellation");
  if (o.pass) o.detail = std::to_string(count) + " instances + {x, y} cancellation";
  return o;
}

Outcome coprime_suite() {
  Outcome o;
  const std::size_t count = 1000;
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1006, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(1, 6)));
    auto s = Setting::monomial(ctx);
    auto [u, v] = gen::random_coprime_pair(rng, ctx);
    o.require(commutator(s, u, v).is_zero(), "nonzero commutator at instance " + std::to_string(i));
    o.require(make_witness(u, v).entries.empty(), "nonempty witness at instance " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

Outcome property_suite() {
  Outcome o;
  const std::size_t count = 5000;
  for (std::size_t i = 0; i < count; ++i) {
    gen::Rng rng(gen::instance_seed(1007, i));
    auto ctx = gen::pool_context(static_cast<std::size_t>(rng.uniform(2, 6)));
    auto s = Setting::monomial(ctx);
    // Witness independence.
    auto [u, v] = gen::random_monomial_pair(rng, ctx);
    Witness w = make_witness(u, v);
    std::vector<std::size_t> free_vars;
    for (std::size_t k = 0; k < ctx->size(); ++k) {
      bool common = false;
      for (const auto& e : w.entries) common = common || e.prime.generator() == Poly::variable(ctx, k);
      if (!common) free_vars.push_back(k);
    }
    FactoredElement c = gen::random_monomial_in(rng, ctx, free_vars, 3);
    o.require(witness_rhs(s, perturb_witness(w, c)) == witness_rhs(s, w),
              "witness independence at instance " + std::to_string(i));
    // Multiplicativity of div along a prime avoided by both factors.
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ctx->size()) - 1));
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < ctx->size(); ++j) {
      if (j != k) others.push_back(j);
    }
    auto p = rng.chance(1, 4) ? PrimeRep::unit(ctx) : PrimeRep::coordinate(CoordinatePrime(ctx, {k}));
    auto x = gen::random_monomial_in(rng, ctx, others, 4);
    auto y = gen::random_monomial_in(rng, ctx, others, 4);
    o.require(div_cycle(s, p, x * y) == div_cycle(s, p, x) + div_cycle(s, p, y),
              "multiplicativity at instance " + std::to_string(i));
    o.require(p.contains(c) || div_quotient(s, p, x * c, y * c) == div_frac(s, p, ratio(x, y)),
              "presentation independence at instance " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(count) + " instances";
  return o;
}

}  // namespace

int main() {
  criterion(1, "example xz-xy golden", 1, example_xz_xy);
  criterion(2, "five-variable example golden", 1, example_five_var);
  criterion(3, "commutator formula, random monomials", 60, formula_suite);
  criterion(4, "commutator formula, plane curves", 120, plane_suite);
  criterion(5, "chi and determinant lengths over Q[t]_(t)", 30, pid_suite);
  criterion(6, "three-term decomposition", 60, three_term_suite);
  criterion(7, "tame symbol composed with div", 30, gersten_suite);
  criterion(8, "coprime pairs", 10, coprime_suite);
  criterion(9, "cycle properties", 30, property_suite);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
