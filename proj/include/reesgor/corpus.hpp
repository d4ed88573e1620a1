#pragma once

#include <string>
#include <vector>

#include "reesgor/ideal.hpp"
#include "reesgor/module.hpp"
#include "reesgor/parse.hpp"

namespace reesgor {

/// A graded ring together with a candidate parameter ideal q = (a_1..a_d).
template <class F>
struct Instance {
  RingPtr<F> ring;
  std::vector<Poly<F>> params;
};

/// k[x^2, y, x^3, xy] presented over k[a,b,c,d] with weights (2,1,3,2),
/// q = (a, b).
template <class F>
Instance<F> build_hochster_roberts(F field = F{}) {
  auto k = polynomial_ring(make_ring(field, {"x", "y"}, {1, 1}));
  std::vector<Poly<F>> targets;
  for (const char* t : {"x^2", "y", "x^3", "x*y"}) targets.push_back(parse_poly(k->ring(), t));
  auto a = ring_map_kernel<F>("hochster_roberts", k, targets, {"a", "b", "c", "d"});
  return {a, {a->variable(0), a->variable(1)}};
}

/// k[x,y,u,v]/(xu, xv, yu, yv), q = (x+u, y+v).
template <class F>
Instance<F> build_two_planes(F field = F{}) {
  auto r = make_ring(field, {"x", "y", "u", "v"}, {1, 1, 1, 1});
  std::vector<Poly<F>> rels;
  for (const char* t : {"x*u", "x*v", "y*u", "y*v"}) rels.push_back(parse_poly(r, t));
  auto a = make_presented_ring<F>("two_planes", r, rels);
  return {a, {parse_poly(a->ring(), "x + u"), parse_poly(a->ring(), "y + v")}};
}

/// k[x,y] with q = (x, y).
template <class F>
Instance<F> build_regular_base(F field = F{}) {
  auto a = make_presented_ring<F>("regular_base", make_ring(field, {"x", "y"}, {1, 1}), {});
  return {a, {a->variable(0), a->variable(1)}};
}

/// The idealization B ⋉ Q of an ideal Q = (q_1..q_t) over the polynomial
/// ring B: B[z_1..z_t] modulo z_i z_j and sum_j s_j z_j for the syzygies s
/// of (q_1..q_t). The new variables have weights deg q_j; q = QA.
template <class F>
Instance<F> build_idealization(const std::string& name, const SpacePtr<F>& base, const std::vector<Poly<F>>& q_gens) {
  const int n = base->nvars();
  const int t = static_cast<int>(q_gens.size());
  static const char* const kNames[] = {"u", "v", "w", "z"};
  std::vector<std::string> names = base->names();
  std::vector<int> weights = base->weights();
  for (int j = 0; j < t; ++j) {
    if (q_gens[j].is_zero() || !q_gens[j].is_homogeneous() || q_gens[j].degree() <= 0)
      fail(ErrorKind::NonPositiveWeight, "ideal generators must be homogeneous of positive degree");
    names.push_back(t <= 4 ? kNames[j] : "z" + std::to_string(j + 1));
    weights.push_back(q_gens[j].degree());
  }
  auto r = make_ring(base->field(), names, weights);
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  std::vector<Poly<F>> rels;
  for (int i = 0; i < t; ++i)
    for (int j = i; j < t; ++j) rels.push_back(Poly<F>::variable(r, n + i) * Poly<F>::variable(r, n + j));
  FreeModule<F> one(base, {0});
  std::vector<Poly<F>> as_vectors;
  for (const auto& g : q_gens) as_vectors.push_back(g.moved_to(one.space));
  for (const auto& s : syzygy(one, as_vectors).second) {
    Poly<F> rel = Poly<F>::zero(r);
    for (int j = 0; j < t; ++j) rel += map_variables(s.component(j, base), r, up) * Poly<F>::variable(r, n + j);
    rels.push_back(rel);
  }
  auto a = make_presented_ring<F>(name, r, rels);
  std::vector<Poly<F>> params;
  for (const auto& g : q_gens) params.push_back(map_variables(g, a->ring(), up));
  Ideal<F> qa(a, params);
  if (static_cast<int>(params.size()) != a->dim() || qa.quotient_dim() != 0)
    fail(ErrorKind::NotParameters, "Q does not give a parameter ideal of the idealization");
  return {a, params};
}

}  // namespace reesgor
