#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/ideal.hpp"
#include "reesgor/invariants.hpp"
#include "reesgor/module.hpp"
#include "reesgor/s2.hpp"

namespace reesgor {

/// R(q^n) = A[q^n t] as P[T_0..T_s]/K. T_j has weight deg g_j + 1, the total
/// of the A-degree and the t-degree, so R is connected graded.
template <class F>
struct ReesPresentation {
  RingPtr<F> ring;                  // P[T] / K
  std::vector<Poly<F>> generators;  // g_0..g_s of q^n in A
  int power = 1;
  int base_vars = 0;                // the first base_vars variables are those of P
  int base_dim = 0;                 // d = dim A
};

namespace detail {

/// Exponent vectors of degree n in d variables, lexicographically decreasing.
inline void exponent_vectors(int d, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = n; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(d, n - e, cur, out);
    cur.pop_back();
  }
}

template <class F>
void require_parameters(const RingPtr<F>& a, const std::vector<Poly<F>>& q) {
  if (static_cast<int>(q.size()) != a->dim())
    fail(ErrorKind::NotParameters, "need exactly d = " + std::to_string(a->dim()) + " parameters");
  if (Ideal<F>(a, q).quotient_dim() > 0) fail(ErrorKind::NotParameters, "A/q does not have finite length");
}

inline std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
  return base;
}

}  // namespace detail

template <class F>
ReesPresentation<F> rees_presentation(const RingPtr<F>& a, const std::vector<Poly<F>>& q, int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "the power must be positive");
  detail::require_parameters(a, q);
  const int d = static_cast<int>(q.size());
  const auto& sp = a->ring();
  const int nv = a->nvars();

  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  detail::exponent_vectors(d, n, cur, exps);
  ReesPresentation<F> out;
  out.power = n;
  out.base_vars = nv;
  out.base_dim = d;
  for (const auto& e : exps) {
    Poly<F> g = Poly<F>::constant(sp, sp->field().one());
    for (int i = 0; i < d; ++i) g = g * q[i].pow(static_cast<unsigned>(e[i]));
    out.generators.push_back(a->reduce(g));
  }
  const int s = static_cast<int>(out.generators.size());
  if (nv + s + 1 > kMaxVars) fail(ErrorKind::ResourceExceeded, "too many variables for the Rees presentation");

  auto names = sp->names();
  auto weights = sp->weights();
  for (int j = 0; j < s; ++j) {
    names.push_back(detail::fresh_name("T" + std::to_string(j), names));
    int deg = 1;
    for (int i = 0; i < d; ++i) deg += exps[j][i] * q[i].degree();
    weights.push_back(deg);
  }
  auto amb = make_ring(sp->field(), names, weights);
  names.push_back(detail::fresh_name("t", names));
  weights.push_back(1);
  auto big = make_ring(sp->field(), names, weights);

  std::vector<int> up(nv);
  for (int i = 0; i < nv; ++i) up[i] = i;
  Poly<F> t = Poly<F>::variable(big, nv + s);
  std::vector<Poly<F>> gens;
  for (const auto& r : a->relations()) gens.push_back(map_variables(r, big, up));
  for (int j = 0; j < s; ++j)
    gens.push_back(Poly<F>::variable(big, nv + j) - map_variables(out.generators[j], big, up) * t);

  std::vector<int> down(nv + s + 1);
  for (int i = 0; i < nv + s; ++i) down[i] = i;
  down[nv + s] = -1;
  std::vector<Poly<F>> kernel;
  for (const auto& g : eliminate(big, gens, 1u << (nv + s), a->limits())) kernel.push_back(map_variables(g, amb, down));
  auto free_amb = polynomial_ring(amb, a->limits());
  Ideal<F> red = interreduce(free_amb, kernel);
  std::string name = a->name() + "_rees" + std::to_string(n);
  out.ring = make_presented_ring<F>(name, amb, red.gens(), a->limits());

  // Substitution T_j |-> g_j t kills every generator in A[t].
  std::vector<std::string> tn = sp->names();
  std::vector<int> tw = sp->weights();
  tn.push_back(names.back());
  tw.push_back(1);
  auto at_sp = make_ring(sp->field(), tn, tw);
  std::vector<Poly<F>> at_rels;
  for (const auto& r : a->relations()) at_rels.push_back(map_variables(r, at_sp, up));
  auto at = make_presented_ring<F>(a->name() + "[t]", at_sp, at_rels, a->limits());
  std::vector<Poly<F>> images;
  for (int i = 0; i < nv; ++i) images.push_back(Poly<F>::variable(at_sp, i));
  Poly<F> tt = Poly<F>::variable(at_sp, nv);
  for (int j = 0; j < s; ++j) images.push_back(map_variables(out.generators[j], at_sp, up) * tt);
  for (const auto& g : out.ring->relations())
    if (!at->is_zero(substitute(g, images, at_sp)))
      fail(ErrorKind::InternalInconsistency, "Rees relation " + g.to_string() + " does not vanish");
  return out;
}

struct OracleVerdict {
  bool cm = false;
  bool gorenstein = false;
  int type = 0;  // last Betti number
  int pd = 0;
  int codim = 0;
  std::vector<int> betti;
};

/// Gorenstein test for the connected graded ring P[T]/K: Cohen-Macaulay and
/// last Betti number 1.
template <class F>
OracleVerdict graded_gorenstein_oracle(const ReesPresentation<F>& rp) {
  const auto& r = rp.ring;
  if (r->dim() != rp.base_dim + 1)
    fail(ErrorKind::InternalInconsistency, "dim R(q^n) = " + std::to_string(r->dim()) + ", expected d + 1");
  auto res = minimal_free_resolution(ring_as_module(r), r->limits());
  OracleVerdict v;
  v.pd = res.pd();
  v.codim = r->nvars() - r->dim();
  v.cm = v.pd == v.codim;
  v.betti = res.ranks();
  v.type = res.free[v.pd].rank();
  v.gorenstein = v.cm && v.type == 1;
  return v;
}

struct PowerVerdict {
  int n = 0;
  OracleVerdict verdict;
};

/// The oracle on R(q^n) for each n in `trials`. For depth-one rings R(q^n)
/// is never Gorenstein for n ≠ d; at n = d it must match `criteria` if given.
template <class F>
std::vector<PowerVerdict> n_neq_d_suite(const RingPtr<F>& a, const std::vector<Poly<F>>& q, const std::vector<int>& trials,
                                        std::optional<bool> criteria = std::nullopt) {
  detail::require_parameters(a, q);
  CohomologyData<F> coh(a);
  auto rep = depth_and_type(a, coh.resolution, a->limits());
  if (rep.depth != 1) fail(ErrorKind::DepthNotOne, "depth A = " + std::to_string(rep.depth));
  auto prof = hypothesis_profile(coh);
  if (!is_standard_parameters(prof, Ideal<F>(a, q), conductor_from_ext(coh)))
    fail(ErrorKind::HypothesisNotVerified, "q is not standard");
  const int d = a->dim();
  std::vector<PowerVerdict> out;
  for (int n : trials) {
    PowerVerdict pv{n, graded_gorenstein_oracle(rees_presentation(a, q, n))};
    if (n != d && pv.verdict.gorenstein)
      fail(ErrorKind::EquivalenceViolation, "R(q^" + std::to_string(n) + ") is Gorenstein with n ≠ d");
    if (n == d && criteria && *criteria != pv.verdict.gorenstein)
      fail(ErrorKind::EquivalenceViolation, "oracle and criteria disagree at n = d");
    out.push_back(pv);
  }
  return out;
}

}  // namespace reesgor
