// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// on any failure. Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "reesgor/reesgor.hpp"

using namespace reesgor;
using namespace reesgor::testing;

namespace {

using Id = Ideal<F>;
using SQ = Subquotient<F>;

/// Collects failed checks; the first few are echoed in the FAIL line.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int g_failed = 0;

void criterion(const std::string& name, double target_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (target_s > 0 && secs >= target_s) c.failures.push_back("over time target");
  const bool ok = c.failures.empty();
  if (!ok) ++g_failed;
  std::printf("%s  %-34s %8.3f s", ok ? "PASS" : "FAIL", name.c_str(), secs);
  if (target_s > 0) std::printf("  (target < %g s)", target_s);
  std::printf("\n");
  for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::printf("      - %s\n", c.failures[i].c_str());
  std::fflush(stdout);
}

std::string corpus_path(const std::string& name) { return std::string(REESGOR_CORPUS_DIR) + "/" + name + ".ring"; }

Instance<F> idealization(const std::vector<std::string>& q) {
  auto b = make_ring(F{}, {"x", "y"}, {1, 1});
  return build_idealization<F>(q.size() == 2 && q[0] == "x" ? "idealization_xy" : "idealization_x2y3", b, polys(b, q));
}

/// Every corpus instance plus further parameter systems on the two planes.
std::vector<Instance<F>> equivalence_instances() {
  std::vector<Instance<F>> all;
  for (const auto& name : corpus_names()) all.push_back(corpus_instance<F>(name));
  auto tp = build_two_planes<F>();
  for (auto q : std::vector<std::vector<std::string>>{{"x + 2*u", "y - v"}, {"x + u + y", "y + v"}})
    all.push_back({tp.ring, polys(tp.ring->ring(), q)});
  return all;
}

void hochster_roberts_end_to_end(Check& c) {
  auto hr = build_hochster_roberts<F>();
  auto rep = decide(hr.ring, hr.params);
  Id m = Id::maximal(hr.ring);
  c(rep.verdict, "verdict Gorenstein");
  c(rep.d == 2 && rep.power == 2, "n = d = 2");
  c(rep.invariants.dim == 2, "dim 2");
  c(rep.invariants.depth == 1, "depth 1");
  c(rep.h1_length == 1, "length H^1 = 1");
  c(rep.h1_socle == 1, "socle of H^1 = 1");
  c(rep.conductor && ideals_equal(*rep.conductor, m), "c = (a,b,c,d)");
  c(rep.sigma && ideals_equal(*rep.sigma, m), "sigma = (a,b,c,d)");
  c(rep.cond3.e_c == 2, "e_c = 2");
  c(rep.cond3.len_a_mod_c == 1 && rep.cond3.e_c == 2 * *rep.cond3.len_a_mod_c, "e_c = 2 l(A/c)");
  c(rep.cond3.reduction_number == 1, "reduction number 1");
}

void hochster_roberts_oracle(Check& c) {
  auto hr = build_hochster_roberts<F>();
  auto rp = rees_presentation(hr.ring, hr.params, 2);
  c(rp.ring->nvars() == 7, "7 ambient variables");
  auto v = graded_gorenstein_oracle(rp);
  c(v.cm, "Cohen-Macaulay");
  c(v.type == 1, "type 1");
  c(v.gorenstein, "Gorenstein");
  c(v.gorenstein == decide(hr.ring, hr.params).verdict, "matches criteria");
}

void n_neq_d(Check& c) {
  auto hr = build_hochster_roberts<F>();
  auto s = n_neq_d_suite(hr.ring, hr.params, {1, 2, 3}, true);
  c(s.size() == 3, "three powers");
  if (s.size() != 3) return;
  c(!s[0].verdict.gorenstein, "n = 1 not Gorenstein");
  c(s[1].verdict.gorenstein, "n = 2 Gorenstein");
  c(!s[2].verdict.gorenstein, "n = 3 not Gorenstein");
}

void buchsbaum_family(Check& c) {
  auto tp = build_two_planes<F>();
  auto b = buchsbaum_criterion(tp.ring, tp.params, true);
  c(b.e_m == 2, "e_m = 2");
  c(b.reduction_number == 1, "reduction number 1");
  c(b.verdict, "Buchsbaum criterion true");
  auto rep = decide(tp.ring, tp.params, {.run_oracle = true});
  c(rep.verdict, "decide true");
  c(rep.oracle && rep.oracle->gorenstein, "oracle true");
}

void idealization_case(Check& c, const std::vector<std::string>& q) {
  auto inst = idealization(q);
  auto rep = decide(inst.ring, inst.params);
  c(rep.verdict, "decide Gorenstein");
}

void negative_control(Check& c) {
  auto reg = build_regular_base<F>();
  auto rep = decide(reg.ring, reg.params);
  c(rep.hypothesis_unmet(), "H^1 = 0 reported");
  c(!rep.verdict, "no positive verdict");
  std::ostringstream out, err;
  c(cli::run({"check", corpus_path("regular_base")}, out, err) == 2, "CLI check exits with hypothesis unmet");
  auto v = graded_gorenstein_oracle(rees_presentation(reg.ring, reg.params, 2));
  c(v.cm, "R(q^2) Cohen-Macaulay");
  c(v.type == 2, "type 2");
  c(!v.gorenstein, "not Gorenstein");
}

void equivalence_suite(Check& c) {
  for (const auto& inst : equivalence_instances()) {
    auto rep = decide(inst.ring, inst.params, {.run_oracle = true});
    const std::string name = inst.ring->name() + " (" + inst.params[0].to_string() + ", " + inst.params[1].to_string() + ")";
    c(rep.cond2.verdict == rep.cond3.verdict, name + ": cond2 = cond3");
    c(rep.oracle && rep.oracle->gorenstein == rep.verdict, name + ": oracle agrees");
    c(rep.verdict == rep.cond2.verdict, name + ": verdict = cond2");
  }
}

void consequence_suite(Check& c) {
  int positives = 0;
  for (const auto& inst : equivalence_instances()) {
    const std::string name = inst.ring->name();
    auto in = prepare_decision(inst.ring, inst.params);
    auto c3 = decide_condition3(in);
    if (!c3.verdict) continue;
    ++positives;
    c(ideals_equal(in.s2.data->conductor, in.conductor()), name + ": two conductor routes agree");
    c(ideals_equal(in.sigma, in.conductor()), name + ": sigma = c");
    std::vector<int> all(in.q.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    auto qa = q_atilde_contraction(in, all);
    c(qa && ideals_equal(*qa, in.sigma), name + ": sigma = q Atilde contraction");
    auto cons = check_consequences(in, c3);
    c(cons.len_atilde_mod_c_equals_2len, name + ": l(Atilde/c) = 2 l(A/c)");
    c(cons.artinian_quotient_gorenstein, name + ": Artinian quotient Gorenstein");
    // A second filter-regular pair gives the same fractional ideal and conductor.
    auto p1 = *in.s2.pair;
    auto p2 = filter_regular_pair(inst.ring, inst.params, &in.conductor(), 0, 8, 6, 1);
    auto d2 = s2_construct(inst.ring, p2);
    c(!(p1.a == p2.a && p1.b == p2.b), name + ": second pair differs");
    c(ideals_equal(d2.conductor, in.conductor()), name + ": c independent of pair");
    c(ideals_equal(ideal_product(Id(inst.ring, {p2.a}), in.s2.data->colon_ideal),
                   ideal_product(Id(inst.ring, {p1.a}), d2.colon_ideal)),
      name + ": a2 J1 = a1 J2");
  }
  c(positives >= 5, "at least five positive instances");
}

void kernel_suite(Check& c) {
  std::mt19937_64 rng(2024);
  auto instances = corpus_instances();
  for (const auto& name : {"two_planes_squares"}) instances.push_back(corpus_instance<F>(name));

  for (const auto& inst : instances) {
    const auto& r = inst.ring->ring();
    const std::string name = inst.ring->name();
    auto gens = inst.ring->relations();
    if (gens.empty()) gens = inst.params;

    // Reduced GB is independent of generator order.
    auto ref = groebner_basis(r, gens);
    auto perm = gens;
    for (int t = 0; t < 10; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (!(groebner_basis(r, perm) == ref)) c(false, name + ": GB depends on order");
    }
    // Membership of random combinations.
    int bad = 0;
    for (int t = 0; t < 100; ++t) bad += !normal_form(random_combination(gens, rng), ref).is_zero();
    c(bad == 0, name + ": normal form soundness");

    // Hilbert series of A against standard-monomial counts.
    if (!inst.ring->relations().empty()) {
      auto lead = leading_exponents(groebner_basis(r, inst.ring->relations()), r->nvars());
      auto series = series_coefficients(inst.ring->hilbert_numerator(), r->weights(), 12);
      for (int d = 0; d <= 12; ++d)
        c(series[d] == count_standard(lead, r->weights(), d), name + ": Hilbert degree " + std::to_string(d));
    }

    // Resolutions of A and of H^0 = (aA : b)/aA; Auslander-Buchsbaum on A.
    auto res = minimal_free_resolution(SQ::quotient_ring(r, inst.ring->relations()));
    c(resolution_defect(res).empty(), name + ": resolution of A " + resolution_defect(res));
    const int n = inst.ring->nvars();
    c(res.pd() + depth_from_ext(res, n) == n, name + ": Auslander-Buchsbaum");
    Id a(inst.ring, {inst.params[0]});
    Id j = colon(a, inst.params[1]);
    auto h0 = minimal_free_resolution(SQ::ideal_quotient(r, j.preimage_gens(), a.preimage_gens()));
    c(resolution_defect(h0).empty(), name + ": resolution of H^0 " + resolution_defect(h0));
  }

  // Monomial ideals in 3 variables with generators of degree <= 4: every
  // principal ideal against every ideal with at most two generators.
  auto k = polynomial_ring(ring("x y z"));
  auto mons = all_monomials(3, 4);
  std::vector<std::vector<Exps>> ideals;
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = i; j < mons.size(); ++j)
      ideals.push_back(i == j ? std::vector<Exps>{mons[i]} : std::vector<Exps>{mons[i], mons[j]});
  int mismatches = 0;
  for (const auto& g1 : ideals) {
    Id a = monomial_ideal(k, g1);
    for (const auto& m : mons) {
      Id b = monomial_ideal(k, {m});
      mismatches += !ideals_equal(intersect(a, b), monomial_ideal(k, brute_intersect(g1, {m})));
      mismatches += !ideals_equal(colon(a, b), monomial_ideal(k, brute_colon(g1, m)));
    }
  }
  // Random ideals with up to four generators on both sides.
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  auto cands = all_monomials(3, 8);
  for (int t = 0; t < 200; ++t) {
    std::vector<Exps> g1, g2;
    for (int i = count(rng); i > 0; --i) g1.push_back(mons[pick(rng)]);
    for (int i = count(rng); i > 0; --i) g2.push_back(mons[pick(rng)]);
    Id a = monomial_ideal(k, g1), b = monomial_ideal(k, g2);
    mismatches += !ideals_equal(intersect(a, b), monomial_ideal(k, brute_intersect(g1, g2)));
    Id q = colon(a, b);
    for (const auto& m : cands)
      mismatches += q.contains(P::monomial(k->ring(), k->ring()->make_monomial(m), k->field().one())) !=
                    in_monomial_colon(g1, g2, m);
  }
  c(mismatches == 0, "monomial intersect/colon brute force: " + std::to_string(mismatches) + " mismatches");

  // Hilbert numerators of random monomial ideals.
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<int> nv(1, 3), ng(1, 5), ex(0, 4), wt(1, 3);
    int n = nv(rng);
    std::vector<int> w(n);
    for (auto& v : w) v = t % 2 ? wt(rng) : 1;
    MonomialList gens;
    for (int g = ng(rng); g > 0; --g) {
      std::vector<int> e(n);
      for (auto& v : e) v = ex(rng);
      gens.push_back(e);
    }
    auto series = series_coefficients(hilbert_numerator(gens, w), w, 12);
    for (int d = 0; d <= 12; ++d)
      if (series[d] != count_standard(gens, w, d)) c(false, "random Hilbert trial " + std::to_string(t));
  }
}

}  // namespace

int main() {
  criterion("hochster_roberts_end_to_end", 30, hochster_roberts_end_to_end);
  criterion("hochster_roberts_oracle", 120, hochster_roberts_oracle);
  criterion("powers_other_than_d", 300, n_neq_d);
  criterion("buchsbaum_family", 60, buchsbaum_family);
  criterion("idealization_xy", 60, [](Check& c) { idealization_case(c, {"x", "y"}); });
  criterion("idealization_x2y3", 60, [](Check& c) { idealization_case(c, {"x^2", "y^3"}); });
  criterion("negative_control", 10, negative_control);
  criterion("equivalence_suite", 0, equivalence_suite);
  criterion("consequence_suite", 0, consequence_suite);
  criterion("kernel_property_suite", 0, kernel_suite);
  std::printf("%s: %d failed\n", g_failed ? "FAIL" : "PASS", g_failed);
  return g_failed ? 1 : 0;
}
