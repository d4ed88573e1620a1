#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/groebner.hpp"
#include "reesgor/hilbert.hpp"
#include "reesgor/polynomial.hpp"

namespace reesgor {

/// Re-expresses f over `target`, sending variable i to variable index_map[i].
/// Variables mapped to -1 must not occur in f.
template <class F>
Poly<F> map_variables(const Poly<F>& f, const SpacePtr<F>& target, const std::vector<int>& index_map) {
  std::vector<Term<F>> ts;
  ts.reserve(f.size());
  std::vector<int> e(target->nvars());
  for (const auto& t : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < f.space()->nvars(); ++i) {
      if (!t.m.exp[i]) continue;
      if (index_map[i] < 0) fail(ErrorKind::InvalidArgument, "variable " + f.space()->names()[i] + " has no image");
      e[index_map[i]] = t.m.exp[i];
    }
    ts.push_back({target->make_monomial(e, t.m.comp), t.c});
  }
  return Poly<F>::from_terms(target, std::move(ts));
}

/// Exponent vectors of the leading monomials of a basis.
template <class F>
MonomialList leading_exponents(const std::vector<Poly<F>>& basis, int nvars) {
  MonomialList out;
  out.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = g.lead_monomial().exp[i];
    out.push_back(std::move(e));
  }
  return out;
}

/// A = P/I for a weighted polynomial ring P and a homogeneous ideal I.
/// The Groebner basis of I and the Krull dimension are computed once.
template <class F>
class PresentedRing {
 public:
  PresentedRing(std::string name, SpacePtr<F> ring, std::vector<Poly<F>> relations, Limits limits = {})
      : name_(std::move(name)), ring_(std::move(ring)), limits_(limits) {
    if (ring_->rank() != 1 || ring_->shift(0) != 0) fail(ErrorKind::InvalidArgument, "ambient space is not a ring");
    if (ring_->order().kind != OrderKind::WeightedRevLex)
      ring_ = ring_with_order(ring_, MonomialOrder{});
    for (auto& r : relations) {
      if (r.is_zero()) continue;
      if (!r.space()->same_ring(*ring_)) fail(ErrorKind::MixedRing, "relation lives in another ring");
      Poly<F> g = r.moved_to(ring_);
      if (!g.is_homogeneous()) fail(ErrorKind::InvalidArgument, "relation " + g.to_string() + " is not homogeneous");
      relations_.push_back(std::move(g));
    }
    gb_ = relations_.empty() ? std::vector<Poly<F>>{} : groebner_basis(ring_, relations_, limits_);
    numerator_ = reesgor::hilbert_numerator(leading_exponents(gb_, ring_->nvars()), ring_->weights());
    dim_ = dimension_from_numerator(numerator_, ring_->nvars());
  }

  const std::string& name() const { return name_; }
  const SpacePtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  int nvars() const { return ring_->nvars(); }
  const std::vector<Poly<F>>& relations() const { return relations_; }
  const std::vector<Poly<F>>& gb() const { return gb_; }
  const IntPoly& hilbert_numerator() const { return numerator_; }
  int dim() const { return dim_; }
  const Limits& limits() const { return limits_; }

  Poly<F> poly(const Poly<F>& f) const { return f.moved_to(ring_); }
  Poly<F> reduce(const Poly<F>& f) const { return normal_form(f.moved_to(ring_), gb_); }
  bool is_zero(const Poly<F>& f) const { return reduce(f).is_zero(); }
  Poly<F> variable(int i) const { return Poly<F>::variable(ring_, i); }
  Poly<F> one() const { return Poly<F>::constant(ring_, field().one()); }

 private:
  std::string name_;
  SpacePtr<F> ring_;
  Limits limits_;
  std::vector<Poly<F>> relations_;
  std::vector<Poly<F>> gb_;
  IntPoly numerator_;
  int dim_ = 0;
};

template <class F>
using RingPtr = std::shared_ptr<const PresentedRing<F>>;

template <class F>
RingPtr<F> make_presented_ring(std::string name, SpacePtr<F> ring, std::vector<Poly<F>> relations, Limits limits = {}) {
  return std::make_shared<const PresentedRing<F>>(std::move(name), std::move(ring), std::move(relations), limits);
}

/// The polynomial ring itself as a presented ring with I = 0.
template <class F>
RingPtr<F> polynomial_ring(const SpacePtr<F>& ring, Limits limits = {}) {
  return make_presented_ring<F>("P", ring, {}, limits);
}

/// Homogeneous ideal of A = P/I, stored by generators whose preimage in P
/// together with I is the ideal. Copies share the lazily computed Groebner
/// basis of the preimage.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> owner, std::vector<Poly<F>> gens) : owner_(std::move(owner)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!g.space()->same_ring(*owner_->ring())) fail(ErrorKind::MixedRing, "generator lives in another ring");
      if (g.is_zero()) continue;
      Poly<F> h = g.moved_to(owner_->ring());
      if (!h.is_homogeneous()) fail(ErrorKind::InvalidArgument, "generator " + h.to_string() + " is not homogeneous");
      gens_.push_back(std::move(h));
    }
  }

  static Ideal zero(const RingPtr<F>& owner) { return Ideal(owner, {}); }
  static Ideal unit(const RingPtr<F>& owner) { return Ideal(owner, {owner->one()}); }
  /// The irrelevant ideal (all variables).
  static Ideal maximal(const RingPtr<F>& owner) {
    std::vector<Poly<F>> v;
    for (int i = 0; i < owner->nvars(); ++i) v.push_back(owner->variable(i));
    return Ideal(owner, std::move(v));
  }

  const RingPtr<F>& owner() const { return owner_; }
  const SpacePtr<F>& ring() const { return owner_->ring(); }
  const std::vector<Poly<F>>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// Generators of the preimage in P: the listed ones followed by I.
  std::vector<Poly<F>> preimage_gens() const {
    std::vector<Poly<F>> v = gens_;
    v.insert(v.end(), owner_->relations().begin(), owner_->relations().end());
    return v;
  }

  /// Reduced Groebner basis of the preimage.
  const std::vector<Poly<F>>& gb() const {
    std::call_once(cache_->once, [&] {
      if (gens_.empty()) cache_->gb = owner_->gb();
      else {
        GroebnerBuilder<F> b(ring(), owner_->limits());
        for (const auto& g : owner_->gb()) b.add(g);
        for (const auto& g : gens_) b.add(g);
        b.complete();
        cache_->gb = b.reduced_basis();
      }
    });
    return cache_->gb;
  }

  Poly<F> reduce(const Poly<F>& f) const { return normal_form(f.moved_to(ring()), gb()); }
  bool contains(const Poly<F>& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& j) const {
    check_owner(j);
    for (const auto& g : j.gens_)
      if (!contains(g)) return false;
    return true;
  }
  bool is_unit() const {
    for (const auto& g : gb())
      if (g.is_constant()) return true;
    return false;
  }
  bool is_zero() const {
    for (const auto& g : gens_)
      if (!owner_->is_zero(g)) return false;
    return true;
  }

  /// Hilbert numerator of P / preimage.
  IntPoly quotient_numerator() const {
    return hilbert_numerator(leading_exponents(gb(), owner_->nvars()), ring()->weights());
  }
  /// Krull dimension of A / this (-1 for the unit ideal).
  int quotient_dim() const { return dimension_from_numerator(quotient_numerator(), owner_->nvars()); }

  void check_owner(const Ideal& o) const {
    if (owner_ == o.owner_) return;
    if (!owner_->ring()->same_ring(*o.owner_->ring()) || !(owner_->gb() == o.owner_->gb()))
      fail(ErrorKind::OwnerMismatch, "ideals belong to different rings");
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly<F>> gb;
  };
  RingPtr<F> owner_;
  std::vector<Poly<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Minimal homogeneous generators of (gens) + I modulo I, each reduced
/// modulo I and made monic. The order is by degree, stable otherwise.
template <class F>
Ideal<F> interreduce(const RingPtr<F>& owner, const std::vector<Poly<F>>& gens) {
  std::vector<Poly<F>> cand;
  for (const auto& g : gens) {
    Poly<F> h = owner->reduce(g);
    if (!h.is_zero()) cand.push_back(h.monic());
  }
  std::stable_sort(cand.begin(), cand.end(), [](const Poly<F>& a, const Poly<F>& b) { return a.degree() < b.degree(); });
  GroebnerBuilder<F> b(owner->ring(), owner->limits());
  for (const auto& g : owner->gb()) b.add(g);
  std::vector<Poly<F>> out;
  for (const auto& g : cand) {
    b.complete(g.degree());
    if (b.add(g)) out.push_back(g);
  }
  return Ideal<F>(owner, std::move(out));
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_owner(b);
  std::vector<Poly<F>> v = a.gens();
  v.insert(v.end(), b.gens().begin(), b.gens().end());
  return interreduce(a.owner(), v);
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_owner(b);
  std::vector<Poly<F>> v;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) v.push_back(a.owner()->reduce(f * g));
  return interreduce(a.owner(), v);
}

/// J^n by repeated products; J^0 = (1).
template <class F>
Ideal<F> ideal_power(const Ideal<F>& j, int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative ideal power");
  Ideal<F> r = Ideal<F>::unit(j.owner());
  for (int i = 0; i < n; ++i) r = ideal_product(r, j);
  return r;
}

template <class F>
bool ideals_equal(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_owner(b);
  return a.contains(b) && b.contains(a);
}

/// Generators of (gens) ∩ k[variables outside `mask`], still written in the
/// ambient space. Uses a block order with the masked variables greatest.
template <class F>
std::vector<Poly<F>> eliminate(const SpacePtr<F>& space, const std::vector<Poly<F>>& gens, std::uint32_t mask,
                               const Limits& limits = {}) {
  auto elim = ring_with_order(space, MonomialOrder{OrderKind::Elimination, mask});
  std::vector<Poly<F>> moved;
  for (const auto& g : gens) moved.push_back(g.moved_to(elim));
  std::vector<Poly<F>> out;
  for (const auto& g : groebner_basis(elim, moved, limits))
    if (!g.involves(mask)) out.push_back(g.moved_to(space));
  return out;
}

/// The polynomial ring on the variables outside `mask` and the variable
/// index map from `space` into it (-1 for eliminated variables).
template <class F>
std::pair<SpacePtr<F>, std::vector<int>> complementary_ring(const SpacePtr<F>& space, std::uint32_t mask) {
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> map(space->nvars(), -1);
  for (int i = 0; i < space->nvars(); ++i) {
    if (mask >> i & 1u) continue;
    map[i] = static_cast<int>(names.size());
    names.push_back(space->names()[i]);
    weights.push_back(space->weights()[i]);
  }
  return {make_ring(space->field(), names, weights), map};
}

/// Generators of (a) ∩ (b) in P, by eliminating t from t*(a) + (1 - t)*(b).
template <class F>
std::vector<Poly<F>> intersect_in_ambient(const SpacePtr<F>& sp, const std::vector<Poly<F>>& a,
                                          const std::vector<Poly<F>>& b, const Limits& limits = {}) {
  const int n = sp->nvars();
  if (n + 1 > kMaxVars) fail(ErrorKind::ResourceExceeded, "too many variables for intersection");
  auto names = sp->names();
  names.push_back("_t");
  auto weights = sp->weights();
  weights.push_back(1);
  const std::uint32_t tmask = 1u << n;
  auto big = make_ring(sp->field(), names, weights, MonomialOrder{OrderKind::Elimination, tmask});
  std::vector<int> up(n), down(n + 1, -1);
  for (int i = 0; i < n; ++i) up[i] = down[i] = i;
  Poly<F> t = Poly<F>::variable(big, n);
  Poly<F> one_minus_t = Poly<F>::constant(big, sp->field().one()) - t;
  std::vector<Poly<F>> gens;
  for (const auto& f : a) gens.push_back(t * map_variables(f, big, up));
  for (const auto& g : b) gens.push_back(one_minus_t * map_variables(g, big, up));
  std::vector<Poly<F>> res;
  for (const auto& g : groebner_basis(big, gens, limits))
    if (!g.involves(tmask)) res.push_back(map_variables(g, sp, down));
  return res;
}

template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_owner(b);
  const auto& owner = a.owner();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  Ideal<F> out = interreduce(owner, intersect_in_ambient(owner->ring(), a.preimage_gens(), b.preimage_gens(), owner->limits()));
  for (const auto& g : out.gens())
    if (!a.contains(g) || !b.contains(g)) fail(ErrorKind::InternalInconsistency, "intersection generator escapes an operand");
  return out;
}

/// a : g, computed in P as (preimage ∩ (g)) / g.
template <class F>
Ideal<F> colon(const Ideal<F>& a, const Poly<F>& g) {
  const auto& owner = a.owner();
  Poly<F> h = owner->poly(g);
  if (a.contains(h)) return Ideal<F>::unit(owner);
  std::vector<Poly<F>> quot;
  for (const auto& k : intersect_in_ambient(owner->ring(), a.preimage_gens(), {h}, owner->limits()))
    quot.push_back(divide_exact(k, h));
  return interreduce(owner, quot);
}

/// a : b as the intersection of the colons by the generators of b.
template <class F>
Ideal<F> colon(const Ideal<F>& a, const Ideal<F>& b) {
  a.check_owner(b);
  Ideal<F> r = Ideal<F>::unit(a.owner());
  for (const auto& g : b.gens()) r = intersect(r, colon(a, g));
  return r;
}

template <class F>
struct Saturation {
  Ideal<F> ideal;
  int index;  // first k with a : b^k = a : b^(k+1)
};

/// a : b^∞ by iterated colon until two consecutive results agree.
template <class F>
Saturation<F> saturate(const Ideal<F>& a, const Ideal<F>& b, int max_steps = 1000) {
  a.check_owner(b);
  Ideal<F> cur = a;
  for (int k = 0; k <= max_steps; ++k) {
    Ideal<F> next = colon(cur, b);
    if (cur.contains(next)) return {cur, k};
    cur = next;
  }
  fail(ErrorKind::ResourceExceeded, "saturation did not stabilize");
}

/// Kernel of k[s_1..s_m] -> target, s_i |-> targets[i]. Source weights are
/// the degrees of the targets.
template <class F>
RingPtr<F> ring_map_kernel(const std::string& name, const RingPtr<F>& target, const std::vector<Poly<F>>& targets,
                           const std::vector<std::string>& source_names) {
  if (targets.size() != source_names.size()) fail(ErrorKind::InvalidArgument, "one source variable per target needed");
  const auto& tsp = target->ring();
  const int n = tsp->nvars();
  const int m = static_cast<int>(targets.size());
  if (n + m > kMaxVars) fail(ErrorKind::ResourceExceeded, "too many variables for ring map kernel");
  std::vector<int> src_weights;
  for (const auto& t : targets) {
    Poly<F> r = target->reduce(t);
    if (r.is_zero() || !r.is_homogeneous() || r.degree() <= 0)
      fail(ErrorKind::NonPositiveWeight, "target " + t.to_string() + " does not have positive degree");
    src_weights.push_back(r.degree());
  }
  auto names = tsp->names();
  auto weights = tsp->weights();
  names.insert(names.end(), source_names.begin(), source_names.end());
  weights.insert(weights.end(), src_weights.begin(), src_weights.end());
  auto big = make_ring(tsp->field(), names, weights);
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  std::vector<Poly<F>> gens;
  for (int j = 0; j < m; ++j) gens.push_back(Poly<F>::variable(big, n + j) - map_variables(targets[j], big, up));
  for (const auto& r : target->relations()) gens.push_back(map_variables(r, big, up));
  const std::uint32_t mask = n >= 32 ? ~0u : ((1u << n) - 1u);
  auto src = make_ring(tsp->field(), source_names, src_weights);
  std::vector<int> down(n + m, -1);
  for (int j = 0; j < m; ++j) down[n + j] = j;
  std::vector<Poly<F>> kernel;
  for (const auto& g : eliminate(big, gens, mask, target->limits())) kernel.push_back(map_variables(g, src, down));
  auto src_ring = make_presented_ring<F>(name, src, {}, target->limits());
  Ideal<F> red = interreduce(src_ring, kernel);
  return make_presented_ring<F>(name, src, red.gens(), target->limits());
}

/// Σ_i ((a_1..â_i..a_d) : a_i) for a system of parameters a_1..a_d.
template <class F>
Ideal<F> sigma_tilde(const RingPtr<F>& owner, const std::vector<Poly<F>>& a) {
  Ideal<F> q(owner, a);
  if (q.quotient_dim() > 0) fail(ErrorKind::NotParameters, "the elements are not a system of parameters");
  std::vector<Poly<F>> all;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Poly<F>> rest;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) rest.push_back(a[j]);
    Ideal<F> c = colon(Ideal<F>(owner, rest), a[i]);
    all.insert(all.end(), c.gens().begin(), c.gens().end());
  }
  return interreduce(owner, all);
}

/// g with a*g = f in A, reduced modulo I. NotDivisible if f ∉ aA.
template <class F>
Poly<F> ring_division(const RingPtr<F>& owner, const Poly<F>& f, const Poly<F>& a) {
  Poly<F> ff = owner->reduce(f);
  if (ff.is_zero()) return Poly<F>::zero(owner->ring());
  std::vector<Poly<F>> gens{owner->poly(a)};
  gens.insert(gens.end(), owner->gb().begin(), owner->gb().end());
  std::vector<Poly<F>> c;
  try {
    c = lift_combination(ff, gens, owner->limits());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAMember) fail(ErrorKind::NotDivisible, f.to_string() + " is not a multiple of " + a.to_string());
    throw;
  }
  Poly<F> g = owner->reduce(c[0]);
  if (!owner->is_zero(g * owner->poly(a) - ff)) fail(ErrorKind::InternalInconsistency, "ring division check failed");
  return g;
}

}  // namespace reesgor
