#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/ideal.hpp"
#include "reesgor/invariants.hpp"
#include "reesgor/module.hpp"

namespace reesgor {

/// Resolution of A and the Ext modules Ext^{n-i}_P(A, ω_P), 0 <= i <= d,
/// computed once per ring.
template <class F>
struct CohomologyData {
  RingPtr<F> ring;
  GradedResolution<F> resolution;
  std::vector<Subquotient<F>> ext;  // ext[i] = Ext^{n-i}, the dual of H^i_m(A)

  explicit CohomologyData(RingPtr<F> a) : ring(std::move(a)) {
    resolution = minimal_free_resolution(ring_as_module(ring), ring->limits());
    const int n = ring->nvars();
    for (int i = 0; i <= std::max(ring->dim(), 1); ++i) ext.push_back(ext_dualizing(resolution, n - i, ring->limits()));
  }
  const Subquotient<F>& dual_of_h(int i) const { return ext.at(i); }
};

struct ProfileEntry {
  int i = 0;                           // local cohomology index
  int ext_index = 0;                   // n - i
  int dim = -1;                        // Krull dimension of Ext^{n-i} (-1: zero)
  std::optional<std::int64_t> length;  // nullopt: infinite
  bool vanishes() const { return dim < 0; }
};

/// H^i_m(A) = 0 for i ≠ 1, d (i < d) and ℓ(H^1_m(A)) < ∞, read off the
/// Matlis duals.
struct HypothesisProfile {
  int n = 0;
  int d = 0;
  std::vector<ProfileEntry> entries;  // i = 0..d
  bool verdict = false;
};

template <class F>
HypothesisProfile hypothesis_profile(const CohomologyData<F>& coh) {
  HypothesisProfile p;
  p.n = coh.ring->nvars();
  p.d = coh.ring->dim();
  p.verdict = true;
  const Limits& lim = coh.ring->limits();
  for (int i = 0; i < static_cast<int>(coh.ext.size()); ++i) {
    ProfileEntry e;
    e.i = i;
    e.ext_index = p.n - i;
    e.dim = module_dim(coh.ext[i], lim);
    e.length = module_length(coh.ext[i], lim);
    if (i < p.d && i != 1 && !e.vanishes()) p.verdict = false;
    if (i == 1 && i < p.d && !e.length) p.verdict = false;
    p.entries.push_back(e);
  }
  return p;
}

/// c = (0) :_A H^1_m(A) as the annihilator of Ext^{n-1}_P(A, ω_P).
template <class F>
Ideal<F> conductor_from_ext(const CohomologyData<F>& coh) {
  return annihilator(coh.dual_of_h(1), coh.ring, coh.ring->limits());
}

template <class F>
struct RegularPair {
  Poly<F> a, b;
  int attempt = 0;  // 0-based index in the candidate sequence
};

namespace detail {

/// a regular on A, b filter-regular on A/aA, both in c (when given).
template <class F>
bool valid_pair(const RingPtr<F>& ring, const Poly<F>& a, const Poly<F>& b, const Ideal<F>* c) {
  if (ring->is_zero(a) || ring->is_zero(b) || !a.is_homogeneous() || !b.is_homogeneous()) return false;
  if (c && (!c->contains(a) || !c->contains(b))) return false;
  if (!colon(Ideal<F>::zero(ring), a).is_zero()) return false;
  Ideal<F> aa(ring, {a});
  Ideal<F> j = colon(aa, b);
  auto m = Subquotient<F>::ideal_quotient(ring->ring(), j.preimage_gens(), aa.preimage_gens());
  return module_length(m, ring->limits()).has_value();
}

}  // namespace detail

/// Candidate pairs in order: (q_1, q_2), other ordered pairs of generators,
/// seeded random combinations of equal-degree powers of the generators, then
/// powers of those. The first one passing the checks wins.
template <class F>
RegularPair<F> filter_regular_pair(const RingPtr<F>& ring, const std::vector<Poly<F>>& q, std::type_identity_t<const Ideal<F>*> c,
                                   std::uint64_t seed = 0, int random_trials = 8, int max_power = 6,
                                   int skip = 0) {
  if (ring->dim() < 2) fail(ErrorKind::WrongDimension, "filter-regular pairs need dim A >= 2");
  if (q.size() < 2) fail(ErrorKind::NotParameters, "need at least two parameters");
  std::vector<std::pair<Poly<F>, Poly<F>>> cands;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (i != j) cands.emplace_back(q[i], q[j]);
  std::swap(cands[0], *std::find_if(cands.begin(), cands.end(), [&](const auto& p) { return p.first == q[0] && p.second == q[1]; }));
  int l = 1;
  for (const auto& g : q) l = std::lcm(l, std::max(1, g.degree()));
  std::vector<Poly<F>> eq;
  for (const auto& g : q) eq.push_back(g.pow(static_cast<unsigned>(l / std::max(1, g.degree()))));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(1, 1000);
  const auto& k = ring->field();
  std::vector<std::pair<Poly<F>, Poly<F>>> randoms;
  for (int t = 0; t < random_trials; ++t) {
    Poly<F> a = Poly<F>::zero(ring->ring()), b = Poly<F>::zero(ring->ring());
    for (const auto& g : eq) {
      a += g.scaled(k.from_int(coef(rng)));
      b += g.scaled(k.from_int(coef(rng)));
    }
    randoms.emplace_back(a, b);
  }
  cands.insert(cands.end(), randoms.begin(), randoms.end());
  for (int e = 2; e <= max_power; ++e) {
    cands.emplace_back(q[0].pow(e), q[1].pow(e));
    for (const auto& [a, b] : randoms) cands.emplace_back(a.pow(e), b.pow(e));
  }
  int found = 0;
  for (std::size_t t = 0; t < cands.size(); ++t)
    if (detail::valid_pair(ring, cands[t].first, cands[t].second, c) && found++ == skip)
      return {ring->poly(cands[t].first), ring->poly(cands[t].second), static_cast<int>(t)};
  fail(ErrorKind::PairNotFound, "no filter-regular pair among " + std::to_string(cands.size()) + " candidates");
}

/// Ã = (1/a)(aA :_A b) recorded through the colon ideal, with H^1 data.
template <class F>
struct S2Data {
  Poly<F> a, b;
  Ideal<F> colon_ideal;  // aA :_A b
  Ideal<F> a_ideal;      // aA
  std::vector<Poly<F>> numerators;  // g_j with Ã generated by the g_j / a
  std::int64_t h1_length = 0;
  Ideal<F> conductor;    // ann((aA:b)/aA) = A : Ã

  Subquotient<F> h0_module() const {
    return Subquotient<F>::ideal_quotient(a_ideal.ring(), colon_ideal.preimage_gens(), a_ideal.preimage_gens());
  }
};

template <class F>
S2Data<F> s2_construct(const RingPtr<F>& ring, const RegularPair<F>& pair) {
  Ideal<F> aa(ring, {pair.a});
  Ideal<F> j = colon(aa, pair.b);
  S2Data<F> d{pair.a, pair.b, j, aa, j.gens(), 0, Ideal<F>::unit(ring)};
  auto m = d.h0_module();
  auto len = module_length(m, ring->limits());
  if (!len) fail(ErrorKind::NotFiniteLength, "(aA : b)/aA has positive dimension");
  d.h1_length = *len;
  d.conductor = annihilator(m, ring, ring->limits());
  return d;
}

/// Socle dimension of H^1_m(A) = μ(Ext^{n-1}), cross-checked against the
/// socle of (aA:b)/aA.
template <class F>
std::int64_t h1_socle(const CohomologyData<F>& coh, const S2Data<F>& data) {
  if (data.h1_length == 0) fail(ErrorKind::NotApplicable, "H^1 vanishes");
  const Limits& lim = coh.ring->limits();
  std::int64_t mu = min_generators(coh.dual_of_h(1), lim);
  std::int64_t soc = socle_dim(data.h0_module(), lim);
  if (mu != soc) fail(ErrorKind::InternalInconsistency, "socle of H^1 disagrees between the two presentations");
  return mu;
}

/// q ⊆ c; under the hypothesis profile this is standardness of q.
template <class F>
bool is_standard_parameters(const HypothesisProfile& profile, const Ideal<F>& q, const Ideal<F>& c) {
  if (!profile.verdict) fail(ErrorKind::HypothesisNotVerified, "hypothesis profile fails; standardness is not decidable here");
  return c.contains(q);
}

/// Ã presented as P[w_1..w_s] / sat(I + (a w_j - g_j), a).
template <class F>
struct S2Presentation {
  RingPtr<F> ring;
  std::vector<std::string> new_variables;
  std::vector<Poly<F>> fractions;  // g_j for w_j = g_j / a
  std::int64_t cokernel_length = 0;  // ℓ(Ã/A) from Hilbert series
  int saturation_index = 0;
};

template <class F>
S2Presentation<F> s2_presentation(const RingPtr<F>& a_ring, const S2Data<F>& data) {
  S2Presentation<F> out;
  const int n = a_ring->nvars();
  const auto& sp = a_ring->ring();
  const int da = data.a.degree();
  std::vector<Poly<F>> frac;
  std::vector<int> wdeg;
  for (const auto& g : data.numerators) {
    if (data.a_ideal.contains(g)) continue;
    int w = g.degree() - da;
    if (w == 0) fail(ErrorKind::NonConnected, "Ã has a degree-0 fraction " + g.to_string() + " / " + data.a.to_string());
    if (w < 0) fail(ErrorKind::NonPositiveWeight, "fraction of negative degree");
    frac.push_back(g);
    wdeg.push_back(w);
  }
  auto names = sp->names();
  auto weights = sp->weights();
  for (std::size_t j = 0; j < frac.size(); ++j) {
    std::string nm = "w" + std::to_string(j + 1);
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "_";
    names.push_back(nm);
    out.new_variables.push_back(nm);
    weights.push_back(wdeg[j]);
  }
  if (static_cast<int>(names.size()) > kMaxVars) fail(ErrorKind::ResourceExceeded, "too many variables for the S2 presentation");
  auto big = make_ring(sp->field(), names, weights);
  auto big_ring = polynomial_ring(big, a_ring->limits());
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  std::vector<Poly<F>> gens;
  for (const auto& r : a_ring->relations()) gens.push_back(map_variables(r, big, up));
  Poly<F> a_big = map_variables(data.a, big, up);
  for (std::size_t j = 0; j < frac.size(); ++j)
    gens.push_back(a_big * Poly<F>::variable(big, n + static_cast<int>(j)) - map_variables(frac[j], big, up));
  auto sat = saturate(Ideal<F>(big_ring, gens), Ideal<F>(big_ring, {a_big}));
  out.saturation_index = sat.index;
  out.fractions = frac;
  out.ring = make_presented_ring<F>(a_ring->name() + "_s2", big, sat.ideal.gens(), a_ring->limits());
  // Injectivity of A -> Ã: the contraction of the presentation ideal is I.
  if (!frac.empty()) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < frac.size(); ++j) mask |= 1u << (n + j);
    std::vector<int> down(names.size(), -1);
    for (int i = 0; i < n; ++i) down[i] = i;
    std::vector<Poly<F>> contracted;
    for (const auto& g : eliminate(big, out.ring->relations(), mask, a_ring->limits()))
      contracted.push_back(map_variables(g, sp, down));
    auto plain = polynomial_ring(sp, a_ring->limits());
    if (!ideals_equal(Ideal<F>(plain, contracted), Ideal<F>(plain, a_ring->relations())))
      fail(ErrorKind::InternalInconsistency, "A does not embed into its S2 presentation");
  }
  // ℓ(Ã/A) from the difference of Hilbert series.
  IntPoly extra = IntPoly::one();
  for (int w : wdeg) extra = extra * IntPoly::one_minus_power(w);
  IntPoly diff = out.ring->hilbert_numerator() - a_ring->hilbert_numerator() * extra;
  out.cokernel_length = diff.is_zero() ? 0 : series_polynomial(diff, weights).value_at_one();
  if (out.cokernel_length != data.h1_length)
    fail(ErrorKind::InternalInconsistency, "ℓ(Ã/A) = " + std::to_string(out.cokernel_length) + " but ℓ(H^1) = " +
                                               std::to_string(data.h1_length));
  return out;
}

/// Everything the decision procedures need from the S2 side.
template <class F>
struct S2Analysis {
  HypothesisProfile profile;
  Ideal<F> conductor;        // route 2 (Ext annihilator); equal to route 1 when a pair exists
  std::optional<RegularPair<F>> pair;
  std::optional<S2Data<F>> data;
  std::optional<bool> standard;    // set when the profile holds
  std::optional<std::int64_t> socle;  // set when H^1 ≠ 0
  std::optional<int> colon_pd;      // pd_P of aA :_A b
};

template <class F>
S2Analysis<F> analyze_s2(const CohomologyData<F>& coh, const std::vector<Poly<F>>& q, std::uint64_t seed = 0) {
  const auto& ring = coh.ring;
  S2Analysis<F> s{hypothesis_profile(coh), conductor_from_ext(coh), {}, {}, {}, {}, {}};
  if (!s.profile.verdict) return s;
  s.standard = is_standard_parameters(s.profile, Ideal<F>(ring, q), s.conductor);
  if (!*s.standard) return s;
  s.pair = filter_regular_pair(ring, q, &s.conductor, seed);
  s.data = s2_construct(ring, *s.pair);
  if (!ideals_equal(s.data->conductor, s.conductor))
    fail(ErrorKind::InternalInconsistency, "conductor routes disagree: " + s.data->conductor.to_string() + " vs " +
                                               s.conductor.to_string());
  if (s.data->h1_length > 0) s.socle = h1_socle(coh, *s.data);
  auto jm = Subquotient<F>::ideal_quotient(ring->ring(), s.data->colon_ideal.preimage_gens(), ring->relations());
  s.colon_pd = minimal_free_resolution(jm, ring->limits()).pd();
  const bool ci = *s.colon_pd == s.profile.n - s.profile.d;
  if (ci != s.profile.verdict) fail(ErrorKind::InternalInconsistency, "Ã Cohen-Macaulay check disagrees with the profile");
  return s;
}

}  // namespace reesgor
