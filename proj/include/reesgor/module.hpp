#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/groebner.hpp"
#include "reesgor/hilbert.hpp"
#include "reesgor/ideal.hpp"
#include "reesgor/polynomial.hpp"

namespace reesgor {

/// A free P-module of finite rank with degree shifts; rank 0 is allowed and
/// then has no space.
template <class F>
struct FreeModule {
  SpacePtr<F> ring;
  std::vector<int> shifts;
  SpacePtr<F> space;  // null iff rank 0

  FreeModule() = default;
  FreeModule(SpacePtr<F> r, std::vector<int> s) : ring(base_ring(r)), shifts(std::move(s)) {
    if (!shifts.empty()) space = make_free_module(ring, shifts);
  }
  int rank() const { return static_cast<int>(shifts.size()); }
};

/// (gens + rels) / rels inside a free module. A cokernel has the basis
/// vectors as generators.
template <class F>
struct Subquotient {
  FreeModule<F> ambient;
  std::vector<Poly<F>> gens;
  std::vector<Poly<F>> rels;

  static Subquotient cokernel(const FreeModule<F>& fm, std::vector<Poly<F>> rels) {
    Subquotient m{fm, {}, std::move(rels)};
    for (int c = 0; c < fm.rank(); ++c) m.gens.push_back(Poly<F>::basis(fm.space, c));
    return m;
  }
  /// (J + L) / L for ideals given by generators in P.
  static Subquotient ideal_quotient(const SpacePtr<F>& ring, std::vector<Poly<F>> j, std::vector<Poly<F>> l) {
    FreeModule<F> fm(ring, {0});
    Subquotient m{fm, {}, {}};
    for (auto& g : j) m.gens.push_back(g.moved_to(fm.space));
    for (auto& g : l) m.rels.push_back(g.moved_to(fm.space));
    return m;
  }
  /// P / J.
  static Subquotient quotient_ring(const SpacePtr<F>& ring, const std::vector<Poly<F>>& j) {
    return ideal_quotient(ring, {Poly<F>::constant(base_ring(ring), ring->field().one())}, j);
  }
  bool is_cokernel() const {
    if (static_cast<int>(gens.size()) != ambient.rank()) return false;
    for (int c = 0; c < ambient.rank(); ++c)
      if (!(gens[c] == Poly<F>::basis(ambient.space, c))) return false;
    return true;
  }
};

template <class F>
using ModulePresentation = Subquotient<F>;

namespace detail {

/// {c in P^r : sum c_j h_j in (untagged)} for h_j and the untagged elements
/// in `fm`, where P^r has the given shifts. Returns a generating set (the
/// block of a position-over-term Groebner basis).
template <class F>
std::vector<Poly<F>> tagged_kernel(const FreeModule<F>& fm, const std::vector<Poly<F>>& h,
                                   const std::vector<Poly<F>>& untagged, const FreeModule<F>& target,
                                   const Limits& limits) {
  const int rf = fm.rank();
  const int r = target.rank();
  if (r == 0) return {};
  if (rf == 0) {
    std::vector<Poly<F>> all;
    for (int j = 0; j < r; ++j) all.push_back(Poly<F>::basis(target.space, j));
    return all;
  }
  std::vector<int> shifts = fm.shifts;
  shifts.insert(shifts.end(), target.shifts.begin(), target.shifts.end());
  std::vector<int> blocks(rf, 0);
  blocks.resize(rf + r, 1);
  const auto& ring = fm.ring;
  auto aug = std::make_shared<const Space<F>>(ring->field(), ring->names(), ring->weights(), ring->order(), shifts, blocks);
  GroebnerBuilder<F> gb(aug, limits);
  for (const auto& u : untagged) gb.add(u.moved_to(aug));
  for (int j = 0; j < r; ++j) gb.add(h[j].moved_to(aug) + Poly<F>::basis(aug, rf + j));
  gb.complete();
  std::vector<Poly<F>> out;
  for (const auto& g : gb.reduced_basis())
    if (static_cast<int>(g.lead_monomial().comp) >= rf) out.push_back(g.moved_to(target.space, -rf));
  return out;
}

template <class F>
Poly<F> drop_component(const Poly<F>& f, const SpacePtr<F>& target, std::uint32_t comp) {
  std::vector<Term<F>> ts;
  for (const auto& t : f.terms()) {
    if (t.m.comp == comp) fail(ErrorKind::InternalInconsistency, "dropping a nonzero component");
    ts.push_back(t);
    if (t.m.comp > comp) --ts.back().m.comp;
  }
  return Poly<F>::from_terms(target, std::move(ts));
}

}  // namespace detail

/// A cokernel F / K with K ⊆ mF (no unit entries) and K minimally generated.
template <class F>
struct MinimalPresentation {
  FreeModule<F> free;
  std::vector<Poly<F>> relations;
};

/// Removes generators that are expressible through the others: every
/// relation with a unit entry eliminates its component.
template <class F>
MinimalPresentation<F> prune(FreeModule<F> fm, std::vector<Poly<F>> rels, const Limits& limits = {}) {
  std::erase_if(rels, [](const Poly<F>& p) { return p.is_zero(); });
  if (fm.rank() > 0 && !rels.empty()) rels = minimal_generators(fm.space, rels, limits);
  while (true) {
    int pick = -1;
    Term<F> unit{};
    for (std::size_t k = 0; k < rels.size() && pick < 0; ++k)
      for (const auto& t : rels[k].terms())
        if (t.m.mask == 0) {
          pick = static_cast<int>(k);
          unit = t;
          break;
        }
    if (pick < 0) break;
    const std::uint32_t comp = unit.m.comp;
    Poly<F> k0 = rels[pick];
    rels.erase(rels.begin() + pick);
    const auto& kf = fm.ring->field();
    auto inv = kf.inv(unit.c);
    std::vector<int> shifts = fm.shifts;
    shifts.erase(shifts.begin() + comp);
    FreeModule<F> smaller(fm.ring, shifts);
    std::vector<Poly<F>> next;
    for (auto& r : rels) {
      Poly<F> entry = r.component(comp, fm.ring);
      if (!entry.is_zero()) r = r - Poly<F>::ring_times(entry.scaled(inv), k0);
      if (r.is_zero()) continue;
      next.push_back(smaller.rank() ? detail::drop_component(r, smaller.space, comp) : r);
    }
    fm = smaller;
    rels = std::move(next);
    if (fm.rank() == 0) {
      rels.clear();
      break;
    }
  }
  if (fm.rank() > 0 && !rels.empty()) rels = minimal_generators(fm.space, rels, limits);
  return {fm, rels};
}

/// M ≅ P^s / K with s the number of nonzero generators, shifted by their
/// degrees; then pruned.
template <class F>
MinimalPresentation<F> to_cokernel(const Subquotient<F>& m, const Limits& limits = {}) {
  if (m.is_cokernel()) return prune(m.ambient, m.rels, limits);
  std::vector<Poly<F>> gens;
  std::vector<int> shifts;
  for (const auto& g : m.gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) fail(ErrorKind::InvalidArgument, "module generators must be homogeneous");
    gens.push_back(g);
    shifts.push_back(g.degree());
  }
  FreeModule<F> target(m.ambient.ring, shifts);
  return prune(target, detail::tagged_kernel(m.ambient, gens, m.rels, target, limits), limits);
}

/// Syzygies of the given elements of one free module: a minimal generating
/// set of {c : sum c_j g_j = 0} in P^r with shifts deg g_j.
template <class F>
std::pair<FreeModule<F>, std::vector<Poly<F>>> syzygy(const FreeModule<F>& fm, const std::vector<Poly<F>>& g,
                                                      const Limits& limits = {}) {
  std::vector<int> shifts;
  for (const auto& x : g) shifts.push_back(x.is_zero() ? 0 : x.degree());
  FreeModule<F> target(fm.ring, shifts);
  auto k = detail::tagged_kernel(fm, g, {}, target, limits);
  if (!k.empty()) k = minimal_generators(target.space, k, limits);
  for (const auto& s : k) {
    Poly<F> back = fm.rank() ? Poly<F>::zero(fm.space) : Poly<F>();
    for (int j = 0; j < target.rank(); ++j) {
      Poly<F> c = s.component(j, fm.ring);
      if (!c.is_zero()) back += Poly<F>::ring_times(c, g[j]);
    }
    if (!back.is_zero()) fail(ErrorKind::InternalInconsistency, "syzygy does not expand to zero");
  }
  return {target, k};
}

/// Minimal graded free resolution 0 <- F_0 <- F_1 <- ... ; maps[j] lists
/// the images of the basis of F_j in F_{j-1} (maps[0] is empty).
template <class F>
struct GradedResolution {
  std::vector<FreeModule<F>> free;
  std::vector<std::vector<Poly<F>>> maps;

  int length() const { return static_cast<int>(free.size()) - 1; }
  /// Projective dimension (the resolution is always computed to the end).
  int pd() const {
    int p = 0;
    for (int j = 0; j < static_cast<int>(free.size()); ++j)
      if (free[j].rank() > 0) p = j;
    return p;
  }
  std::vector<int> ranks() const {
    std::vector<int> r;
    for (const auto& f : free) r.push_back(f.rank());
    return r;
  }
  /// Betti table as {(homological degree, internal degree) -> count}.
  std::map<std::pair<int, int>, int> betti() const {
    std::map<std::pair<int, int>, int> b;
    for (int j = 0; j < static_cast<int>(free.size()); ++j)
      for (int s : free[j].shifts) ++b[{j, s}];
    return b;
  }
  std::string betti_string() const {
    std::string s;
    for (int j = 0; j < static_cast<int>(free.size()); ++j) {
      if (j) s += " ";
      s += std::to_string(free[j].rank());
    }
    return s;
  }
};

/// Computes the minimal free resolution of M; ResourceExceeded if it would
/// be longer than limits.resolution_cap.
template <class F>
GradedResolution<F> minimal_free_resolution(const Subquotient<F>& m, const Limits& limits = {}) {
  MinimalPresentation<F> pres = to_cokernel(m, limits);
  GradedResolution<F> res;
  res.free.push_back(pres.free);
  res.maps.emplace_back();
  if (pres.free.rank() == 0) return res;
  std::vector<Poly<F>> cols = pres.relations;
  while (!cols.empty()) {
    if (res.length() + 1 > limits.resolution_cap) fail(ErrorKind::ResourceExceeded, "resolution longer than the cap");
    std::vector<int> shifts;
    for (const auto& c : cols) shifts.push_back(c.degree());
    res.free.emplace_back(res.free.back().ring, shifts);
    res.maps.push_back(cols);
    cols = syzygy(res.free[res.free.size() - 2], cols, limits).second;
  }
  return res;
}

/// Transposed map of `maps[j]`: for each basis vector of F_{j-1}^* its image
/// in F_j^*, where the duals carry shifts N - a.
template <class F>
std::vector<Poly<F>> transpose_map(const GradedResolution<F>& res, int j, const FreeModule<F>& dual_dst) {
  const int rows = res.free[j - 1].rank();
  const int cols = res.free[j].rank();
  std::vector<std::vector<Term<F>>> images(rows);
  for (int l = 0; l < cols; ++l)
    for (const auto& t : res.maps[j][l].terms()) {
      Term<F> u = t;
      u.m.comp = static_cast<std::uint32_t>(l);
      images[t.m.comp].push_back(u);
    }
  std::vector<Poly<F>> out;
  for (int k = 0; k < rows; ++k) out.push_back(Poly<F>::from_terms(dual_dst.space, std::move(images[k])));
  return out;
}

template <class F>
FreeModule<F> dual_free(const FreeModule<F>& f, int n_shift) {
  std::vector<int> s;
  for (int a : f.shifts) s.push_back(n_shift - a);
  return FreeModule<F>(f.ring, s);
}

/// Ext^i_P(M, ω_P) with ω_P = P(-N), N the sum of the weights, as the
/// cohomology of the dual of the minimal resolution of M.
template <class F>
Subquotient<F> ext_dualizing(const GradedResolution<F>& res, int i, const Limits& limits = {}) {
  const auto& ring = res.free[0].ring;
  if (i < 0 || i > ring->nvars()) fail(ErrorKind::InvalidArgument, "Ext index out of range");
  int nsum = 0;
  for (int w : ring->weights()) nsum += w;
  if (i > res.length() || res.free[i].rank() == 0) {
    FreeModule<F> zero(ring, {});
    return Subquotient<F>{zero, {}, {}};
  }
  FreeModule<F> di = dual_free(res.free[i], nsum);
  std::vector<Poly<F>> kernel;
  if (i + 1 <= res.length() && res.free[i + 1].rank() > 0) {
    FreeModule<F> dn = dual_free(res.free[i + 1], nsum);
    auto images = transpose_map(res, i + 1, dn);
    kernel = detail::tagged_kernel(dn, images, {}, di, limits);
    if (!kernel.empty()) kernel = minimal_generators(di.space, kernel, limits);
  } else {
    for (int c = 0; c < di.rank(); ++c) kernel.push_back(Poly<F>::basis(di.space, c));
  }
  std::vector<Poly<F>> image;
  if (i >= 1 && res.free[i - 1].rank() > 0) {
    image = transpose_map(res, i, di);
  }
  return Subquotient<F>{di, kernel, image};
}

template <class F>
Subquotient<F> ext_dualizing(const Subquotient<F>& m, int i, const Limits& limits = {}) {
  return ext_dualizing(minimal_free_resolution(m, limits), i, limits);
}

namespace detail {

/// Per-component Hilbert data of a cokernel F / K.
template <class F>
std::vector<IntPoly> component_numerators(const MinimalPresentation<F>& p, const Limits& limits) {
  std::vector<IntPoly> out;
  const int r = p.free.rank();
  if (r == 0) return out;
  auto gb = p.relations.empty() ? std::vector<Poly<F>>{} : groebner_basis(p.free.space, p.relations, limits);
  const int n = p.free.ring->nvars();
  std::vector<MonomialList> lead(r);
  for (const auto& g : gb) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = g.lead_monomial().exp[i];
    lead[g.lead_monomial().comp].push_back(e);
  }
  for (int c = 0; c < r; ++c) out.push_back(hilbert_numerator(lead[c], p.free.ring->weights()));
  return out;
}

}  // namespace detail

/// Krull dimension of M (-1 for the zero module).
template <class F>
int module_dim(const Subquotient<F>& m, const Limits& limits = {}) {
  auto p = to_cokernel(m, limits);
  int d = -1;
  for (const auto& num : detail::component_numerators(p, limits))
    d = std::max(d, dimension_from_numerator(num, p.free.ring->nvars()));
  return d;
}

/// Length of M over P, or nullopt when M has positive dimension.
template <class F>
std::optional<std::int64_t> module_length(const Subquotient<F>& m, const Limits& limits = {}) {
  auto p = to_cokernel(m, limits);
  std::int64_t total = 0;
  const int n = p.free.rank() ? p.free.ring->nvars() : 0;
  for (const auto& num : detail::component_numerators(p, limits)) {
    int d = dimension_from_numerator(num, n);
    if (d > 0) return std::nullopt;
    if (d < 0) continue;
    total += series_polynomial(num, p.free.ring->weights()).value_at_one();
  }
  return total;
}

/// Hilbert series of a finite-length module as {degree -> dimension}.
template <class F>
std::map<int, std::int64_t> finite_hilbert_function(const Subquotient<F>& m, const Limits& limits = {}) {
  auto p = to_cokernel(m, limits);
  std::map<int, std::int64_t> h;
  const int n = p.free.rank() ? p.free.ring->nvars() : 0;
  auto nums = detail::component_numerators(p, limits);
  for (int c = 0; c < static_cast<int>(nums.size()); ++c) {
    int d = dimension_from_numerator(nums[c], n);
    if (d > 0) fail(ErrorKind::NotFiniteLength, "module has positive dimension");
    if (d < 0) continue;
    IntPoly s = series_polynomial(nums[c], p.free.ring->weights());
    for (int k = 0; k <= s.degree(); ++k)
      if (s[k]) h[k + p.free.shifts[c]] += s[k];
  }
  std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
  return h;
}

/// Number of minimal generators, dim_k M / mM.
template <class F>
int min_generators(const Subquotient<F>& m, const Limits& limits = {}) {
  return to_cokernel(m, limits).free.rank();
}

/// ann_P(M), returned as an ideal of `owner` (its preimage contains the
/// annihilator computed in P).
template <class F>
Ideal<F> annihilator(const Subquotient<F>& m, const RingPtr<F>& owner, const Limits& limits = {}) {
  auto p = to_cokernel(m, limits);
  Ideal<F> result = Ideal<F>::unit(owner);
  for (int c = 0; c < p.free.rank(); ++c) {
    FreeModule<F> tag(p.free.ring, {p.free.shifts[c]});
    auto k = detail::tagged_kernel(p.free, {Poly<F>::basis(p.free.space, c)}, p.relations, tag, limits);
    std::vector<Poly<F>> gens;
    for (const auto& g : k) gens.push_back(g.component(0, owner->ring()));
    result = intersect(result, interreduce(owner, gens));
  }
  return result;
}

/// (K :_F m) for a cokernel F / K: the kernel of v |-> (x_1 v, ..., x_n v)
/// into (F/K)^n, where copy i is shifted down by w_i to keep the map graded.
template <class F>
std::vector<Poly<F>> socle_preimage(const MinimalPresentation<F>& p, const Limits& limits = {}) {
  const int r = p.free.rank();
  const auto& ring = p.free.ring;
  const int n = ring->nvars();
  std::vector<int> big_shifts;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < r; ++c) big_shifts.push_back(p.free.shifts[c] - ring->weights()[i]);
  FreeModule<F> big(ring, big_shifts);
  std::vector<Poly<F>> h, untagged;
  for (int c = 0; c < r; ++c) {
    Poly<F> v = Poly<F>::zero(big.space);
    for (int i = 0; i < n; ++i) v += Poly<F>::ring_times(Poly<F>::variable(ring, i), Poly<F>::basis(big.space, i * r + c));
    h.push_back(v);
  }
  for (int i = 0; i < n; ++i)
    for (const auto& k : p.relations) untagged.push_back(k.moved_to(big.space, i * r));
  return detail::tagged_kernel(big, h, untagged, p.free, limits);
}

/// Length of the socle (0 :_M m) of a finite-length module.
template <class F>
std::int64_t socle_dim(const Subquotient<F>& m, const Limits& limits = {}) {
  auto p = to_cokernel(m, limits);
  if (p.free.rank() == 0) return 0;
  if (!module_length(Subquotient<F>::cokernel(p.free, p.relations), limits))
    fail(ErrorKind::NotFiniteLength, "socle of a module of positive dimension");
  Subquotient<F> soc{p.free, socle_preimage(p, limits), p.relations};
  return *module_length(soc, limits);
}

}  // namespace reesgor
