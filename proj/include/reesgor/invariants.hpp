#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/hilbert.hpp"
#include "reesgor/ideal.hpp"
#include "reesgor/module.hpp"

namespace reesgor {

template <class F>
int krull_dim(const RingPtr<F>& a) {
  return a->dim();
}

/// The A-module A as a P-module.
template <class F>
Subquotient<F> ring_as_module(const RingPtr<F>& a) {
  return Subquotient<F>::quotient_ring(a->ring(), a->relations());
}

struct InvariantReport {
  int nvars = 0;
  int dim = 0;
  int depth = 0;
  int pd = 0;
  bool cm = false;
  /// r_A(A) = μ(Ext^{n-depth}_P(A, ω_P)); equals the last Betti number when A is CM.
  int type = 0;
  std::vector<int> betti;
};

/// Depth from the minimal free resolution (Auslander-Buchsbaum) and the
/// type as the number of generators of the first nonvanishing Ext.
template <class F>
InvariantReport depth_and_type(const RingPtr<F>& a, const GradedResolution<F>& res, const Limits& limits = {}) {
  InvariantReport r;
  r.nvars = a->nvars();
  r.dim = a->dim();
  r.pd = res.pd();
  r.depth = r.nvars - r.pd;
  r.cm = r.depth == r.dim;
  r.betti = res.ranks();
  r.type = min_generators(ext_dualizing(res, r.pd, limits), limits);
  if (r.cm && r.type != res.free[r.pd].rank())
    fail(ErrorKind::InternalInconsistency, "type of a Cohen-Macaulay ring disagrees with its last Betti number");
  return r;
}

template <class F>
InvariantReport depth_and_type(const RingPtr<F>& a, const Limits& limits = {}) {
  return depth_and_type(a, minimal_free_resolution(ring_as_module(a), limits), limits);
}

/// ℓ(A/J) for J with dim A/J = 0.
template <class F>
std::int64_t artinian_length(const Ideal<F>& j) {
  IntPoly num = j.quotient_numerator();
  int d = dimension_from_numerator(num, j.owner()->nvars());
  if (d > 0) fail(ErrorKind::NotArtinian, "A/J has positive dimension");
  if (d < 0) return 0;
  return series_polynomial(num, j.ring()->weights()).value_at_one();
}

struct MultiplicityResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> lengths;  // ℓ(A/J^n) for n = 1, 2, ...
};

/// e_J(A) from the d-th differences of n |-> ℓ(A/J^n), accepted once three
/// consecutive differences agree.
template <class F>
MultiplicityResult multiplicity(const Ideal<F>& j, int max_power = 30) {
  const int d = j.owner()->dim();
  if (j.quotient_dim() > 0) fail(ErrorKind::NotArtinian, "J is not primary to the maximal ideal");
  MultiplicityResult res;
  std::vector<std::int64_t> len{0};  // ℓ(A/J^0) = 0
  std::vector<std::int64_t> diffs;
  Ideal<F> power = Ideal<F>::unit(j.owner());
  for (int n = 1; n <= max_power; ++n) {
    power = ideal_product(power, j);
    len.push_back(artinian_length(power));
    res.lengths.push_back(len.back());
    if (n < d) continue;
    // d-th backward difference at n.
    std::int64_t diff = 0, binom = 1;
    for (int k = 0; k <= d; ++k) {
      diff += (k % 2 ? -1 : 1) * binom * len[n - k];
      binom = binom * (d - k) / (k + 1);
    }
    diffs.push_back(diff);
    const std::size_t m = diffs.size();
    if (m >= 3 && diffs[m - 1] == diffs[m - 2] && diffs[m - 2] == diffs[m - 3]) {
      res.value = diff;
      return res;
    }
  }
  fail(ErrorKind::NoStabilization, "multiplicity differences did not stabilize");
}

/// Smallest r <= r_max with c^{r+1} = q c^r, or nullopt.
template <class F>
std::optional<int> is_reduction(const Ideal<F>& q, const Ideal<F>& c, int r_max = 10) {
  q.check_owner(c);
  if (!c.contains(q)) fail(ErrorKind::NotContained, "q is not contained in c");
  Ideal<F> cr = Ideal<F>::unit(c.owner());
  for (int r = 0; r <= r_max; ++r) {
    Ideal<F> next = ideal_product(cr, c);
    if (ideals_equal(next, ideal_product(q, cr))) return r;
    cr = next;
  }
  return std::nullopt;
}

/// A/J Gorenstein for dim A/J = 0: ℓ((J : m)/J) = 1.
template <class F>
bool artinian_gorenstein(const Ideal<F>& j) {
  if (j.quotient_dim() > 0) fail(ErrorKind::NotArtinian, "A/J has positive dimension");
  if (j.is_unit()) return false;
  Ideal<F> soc = colon(j, Ideal<F>::maximal(j.owner()));
  auto m = Subquotient<F>::ideal_quotient(j.ring(), soc.preimage_gens(), j.preimage_gens());
  return module_length(m, j.owner()->limits()) == 1;
}

}  // namespace reesgor
