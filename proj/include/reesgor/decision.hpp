#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/ideal.hpp"
#include "reesgor/invariants.hpp"
#include "reesgor/rees_oracle.hpp"
#include "reesgor/s2.hpp"

namespace reesgor {

struct DecisionOptions {
  std::uint64_t seed = 0;
  int r_max = 10;
  bool run_oracle = false;
};

/// Shared state for both criteria: cohomology, the S2 data and the ring
/// invariants. Construction checks every precondition.
template <class F>
struct DecisionInput {
  RingPtr<F> ring;
  std::vector<Poly<F>> q;
  std::shared_ptr<CohomologyData<F>> coh;
  S2Analysis<F> s2;
  InvariantReport invariants;
  Ideal<F> sigma;

  int d() const { return ring->dim(); }
  const Ideal<F>& conductor() const { return s2.conductor; }
  std::int64_t h1_length() const { return *s2.profile.entries[1].length; }
};

template <class F>
DecisionInput<F> prepare_decision(const RingPtr<F>& a, const std::vector<Poly<F>>& q, const DecisionOptions& opt = {}) {
  detail::require_parameters(a, q);
  auto coh = std::make_shared<CohomologyData<F>>(a);
  auto s2 = analyze_s2(*coh, q, opt.seed);
  if (!s2.profile.verdict) fail(ErrorKind::HypothesisNotVerified, "local cohomology profile fails");
  if (!*s2.standard) fail(ErrorKind::HypothesisNotVerified, "q is not contained in the conductor, so not standard");
  auto inv = depth_and_type(a, coh->resolution, a->limits());
  return {a, q, coh, std::move(s2), inv, sigma_tilde(a, q)};
}

struct Condition2 {
  bool h1_nonzero = false;
  bool socle_is_1 = false;
  bool c_equals_sigma = false;
  bool verdict = false;
};

struct Condition3 {
  bool depth_is_1 = false;
  bool type_is_1 = false;
  std::optional<std::int64_t> e_c;          // unset when c = A
  std::optional<std::int64_t> len_a_mod_c;
  bool multiplicity_equation = false;       // e_c = 2 ℓ(A/c)
  std::optional<int> reduction_number;      // of c over q
  bool verdict = false;
};

struct Consequences {
  bool c_equals_q_atilde = false;      // c is generated by the a_i g_j / a
  bool sigma_equals_q_atilde = false;
  bool len_atilde_mod_c_equals_2len = false;
  bool artinian_quotient_gorenstein = false;
  bool all() const {
    return c_equals_q_atilde && sigma_equals_q_atilde && len_atilde_mod_c_equals_2len && artinian_quotient_gorenstein;
  }
};

template <class F>
Condition2 decide_condition2(const DecisionInput<F>& in) {
  Condition2 c;
  c.h1_nonzero = in.h1_length() > 0;
  c.socle_is_1 = in.s2.socle == 1;
  c.c_equals_sigma = ideals_equal(in.conductor(), in.sigma);
  c.verdict = c.h1_nonzero && c.socle_is_1 && c.c_equals_sigma;
  return c;
}

template <class F>
Condition3 decide_condition3(const DecisionInput<F>& in, int r_max = 10) {
  Condition3 c;
  c.depth_is_1 = in.invariants.depth == 1;
  c.type_is_1 = in.invariants.type == 1;
  const Ideal<F>& cond = in.conductor();
  if (!cond.is_unit()) {
    c.e_c = multiplicity(cond).value;
    c.len_a_mod_c = artinian_length(cond);
    c.multiplicity_equation = *c.e_c == 2 * *c.len_a_mod_c;
    c.reduction_number = is_reduction(Ideal<F>(in.ring, in.q), cond, r_max);
  }
  c.verdict = c.depth_is_1 && c.type_is_1 && c.multiplicity_equation && c.reduction_number.has_value();
  return c;
}

template <class F>
Condition2 decide_condition2(const RingPtr<F>& a, const std::vector<Poly<F>>& q, const DecisionOptions& opt = {}) {
  return decide_condition2(prepare_decision(a, q, opt));
}

template <class F>
Condition3 decide_condition3(const RingPtr<F>& a, const std::vector<Poly<F>>& q, const DecisionOptions& opt = {}) {
  return decide_condition3(prepare_decision(a, q, opt), opt.r_max);
}

/// The ideal of A generated by a_i g_j / a for i in `which`; nullopt when
/// some product is not divisible by a.
template <class F>
std::optional<Ideal<F>> q_atilde_contraction(const DecisionInput<F>& in, const std::vector<int>& which) {
  const auto& data = *in.s2.data;
  std::vector<Poly<F>> gens;
  try {
    for (int i : which)
      for (const auto& g : data.numerators) gens.push_back(ring_division(in.ring, in.q[i] * g, data.a));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotDivisible) return std::nullopt;
    throw;
  }
  return Ideal<F>(in.ring, gens);
}

template <class F>
Consequences check_consequences(const DecisionInput<F>& in, const Condition3& c3) {
  Consequences out;
  const int d = in.d();
  std::vector<int> all(d), head(d - 1);
  for (int i = 0; i < d; ++i) all[i] = i;
  for (int i = 0; i + 1 < d; ++i) head[i] = i;
  if (auto qa = q_atilde_contraction(in, all)) {
    out.c_equals_q_atilde = ideals_equal(*qa, in.conductor());
    out.sigma_equals_q_atilde = ideals_equal(*qa, in.sigma);
  }
  out.len_atilde_mod_c_equals_2len = c3.len_a_mod_c && in.h1_length() + *c3.len_a_mod_c == 2 * *c3.len_a_mod_c;
  if (auto qh = q_atilde_contraction(in, head)) {
    Ideal<F> j = ideal_sum(*qh, Ideal<F>(in.ring, {in.q[d - 1]}));
    out.artinian_quotient_gorenstein = artinian_gorenstein(j);
  }
  return out;
}

template <class F>
struct DecisionReport {
  RingPtr<F> ring;
  std::vector<Poly<F>> q;
  int d = 0;
  int power = 0;  // the Rees power n = d
  HypothesisProfile profile;
  bool standard = false;
  std::int64_t h1_length = 0;
  std::optional<std::int64_t> h1_socle;
  std::optional<Ideal<F>> conductor;
  std::optional<Ideal<F>> sigma;
  std::optional<RegularPair<F>> pair;
  InvariantReport invariants;
  Condition2 cond2;
  Condition3 cond3;
  std::optional<Consequences> consequences;  // verdict-true instances
  std::optional<OracleVerdict> oracle;
  bool verdict = false;

  /// H^1 = 0: condition (2) cannot hold and the criteria say nothing more.
  bool hypothesis_unmet() const { return !cond2.h1_nonzero; }
};

/// Conditions (2) and (3) for R(q^d), their agreement, the consequences of a
/// positive verdict and optionally the oracle on R(q^d).
template <class F>
DecisionReport<F> decide(const RingPtr<F>& a, const std::vector<Poly<F>>& q, const DecisionOptions& opt = {}) {
  auto in = prepare_decision(a, q, opt);
  DecisionReport<F> r;
  r.ring = a;
  r.q = q;
  r.d = in.d();
  r.power = r.d;
  r.profile = in.s2.profile;
  r.standard = *in.s2.standard;
  r.h1_length = in.h1_length();
  r.h1_socle = in.s2.socle;
  r.conductor = in.conductor();
  r.sigma = in.sigma;
  r.pair = in.s2.pair;
  r.invariants = in.invariants;
  r.cond2 = decide_condition2(in);
  r.cond3 = decide_condition3(in, opt.r_max);
  if (r.cond2.verdict != r.cond3.verdict)
    fail(ErrorKind::EquivalenceViolation, "conditions (2) and (3) disagree");
  r.verdict = r.cond2.verdict;
  if (r.verdict) {
    r.consequences = check_consequences(in, r.cond3);
    if (!r.consequences->all()) fail(ErrorKind::EquivalenceViolation, "a consequence of the Gorenstein verdict fails");
  }
  if (opt.run_oracle) {
    r.oracle = graded_gorenstein_oracle(rees_presentation(a, q, r.d));
    if (r.oracle->gorenstein != r.verdict) fail(ErrorKind::EquivalenceViolation, "oracle disagrees with the criteria");
  }
  return r;
}

struct ShimodaReport {
  bool a_regular = false;
  bool b_regular = false;
  bool colon_intersection = false;  // (aA:b) ∩ (bA:a) = aA ∩ bA
  bool artinian_gorenstein = false; // A/(ab, a(aA:b), b(bA:a)) Gorenstein
  bool verdict = false;
};

/// The d = 2 criterion in terms of a, b alone.
template <class F>
ShimodaReport shimoda_check(const RingPtr<F>& ring, const Poly<F>& a, const Poly<F>& b) {
  if (ring->dim() != 2) fail(ErrorKind::WrongDimension, "the criterion needs dim A = 2");
  detail::require_parameters(ring, std::vector<Poly<F>>{a, b});
  ShimodaReport s;
  Ideal<F> zero = Ideal<F>::zero(ring);
  s.a_regular = colon(zero, a).is_zero();
  s.b_regular = colon(zero, b).is_zero();
  Ideal<F> aa(ring, {a}), bb(ring, {b});
  Ideal<F> ab = colon(aa, b), ba = colon(bb, a);
  s.colon_intersection = ideals_equal(intersect(ab, ba), intersect(aa, bb));
  Ideal<F> j = ideal_sum(ideal_sum(Ideal<F>(ring, {a * b}), ideal_product(aa, ab)), ideal_product(bb, ba));
  s.artinian_gorenstein = artinian_gorenstein(j);
  s.verdict = s.a_regular && s.b_regular && s.colon_intersection && s.artinian_gorenstein;
  return s;
}

template <class F>
struct BuchsbaumReport {
  std::int64_t e_m = 0;
  std::optional<int> reduction_number;  // of m over q
  Ideal<F> b_ideal;                     // (a_1..a_{d-1}) : a_d + a_d A
  std::int64_t len_b = 0;
  std::optional<std::int64_t> e_q;      // set when the caller asserts A Buchsbaum
  bool verdict = false;
};

/// For a Buchsbaum ring of depth one: R(q^d) Gorenstein iff e_m(A) = 2 and
/// q is a reduction of m. Buchsbaumness is the caller's assertion; with it,
/// e_q(A) = ℓ(A/𝔟) is checked as well.
template <class F>
BuchsbaumReport<F> buchsbaum_criterion(const RingPtr<F>& a, const std::vector<Poly<F>>& q, bool assert_buchsbaum,
                                       int r_max = 10) {
  detail::require_parameters(a, q);
  auto inv = depth_and_type(a, a->limits());
  if (inv.depth != 1) fail(ErrorKind::DepthNotOne, "depth A = " + std::to_string(inv.depth));
  Ideal<F> m = Ideal<F>::maximal(a);
  std::vector<Poly<F>> head(q.begin(), q.end() - 1);
  Ideal<F> ad(a, {q.back()});
  BuchsbaumReport<F> r{multiplicity(m).value, is_reduction(Ideal<F>(a, q), m, r_max),
                       ideal_sum(colon(Ideal<F>(a, head), q.back()), ad), 0, {}, false};
  r.len_b = artinian_length(r.b_ideal);
  if (assert_buchsbaum) {
    r.e_q = multiplicity(Ideal<F>(a, q)).value;
    if (*r.e_q != r.len_b) fail(ErrorKind::InternalInconsistency, "e_q(A) differs from ℓ(A/𝔟)");
  }
  r.verdict = r.e_m == 2 && r.reduction_number.has_value();
  return r;
}

}  // namespace reesgor
