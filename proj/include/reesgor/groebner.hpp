#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <optional>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/polynomial.hpp"

namespace reesgor {

/// Resource caps shared by every computation that may blow up.
struct Limits {
  std::size_t max_pairs = 20'000'000;  // S-pairs processed per Groebner run
  int resolution_cap = 64;             // maximal length of a free resolution
};

namespace detail {

template <class F>
struct Reducer {
  const std::vector<const Poly<F>*>& divisors;

  const Poly<F>* find(const Monomial& m) const {
    for (const Poly<F>* g : divisors)
      if (monomial_divides(g->lead_monomial(), m)) return g;
    return nullptr;
  }

  /// Full (or top-only) reduction of f. Divisors need not be monic.
  Poly<F> reduce(const Poly<F>& f, bool full = true) const {
    const auto& sp = *f.space();
    const auto& k = sp.field();
    std::vector<Term<F>> cur(f.terms().begin(), f.terms().end());
    std::vector<Term<F>> rem;
    std::size_t pos = 0;
    std::vector<Term<F>> next;
    while (pos < cur.size()) {
      const Term<F>& lt = cur[pos];
      const Poly<F>* g = find(lt.m);
      if (!g) {
        if (!full) {
          rem.insert(rem.end(), std::make_move_iterator(cur.begin() + pos), std::make_move_iterator(cur.end()));
          break;
        }
        rem.push_back(std::move(cur[pos]));
        ++pos;
        continue;
      }
      auto c = k.mul(lt.c, k.inv(g->lead_coef()));
      Monomial q = monomial_quotient(lt.m, g->lead_monomial());
      const auto& gt = g->terms();
      next.clear();
      next.reserve(cur.size() - pos + gt.size());
      std::size_t i = pos + 1, j = 1;
      while (i < cur.size() || j < gt.size()) {
        if (j == gt.size()) {
          next.push_back(std::move(cur[i++]));
          continue;
        }
        Monomial gm = monomial_product(gt[j].m, q);
        int cmp = i < cur.size() ? sp.compare(cur[i].m, gm) : -1;
        if (cmp > 0) {
          next.push_back(std::move(cur[i++]));
        } else if (cmp < 0) {
          next.push_back({gm, k.neg(k.mul(c, gt[j].c))});
          ++j;
        } else {
          auto v = k.sub(cur[i].c, k.mul(c, gt[j].c));
          if (!k.is_zero(v)) next.push_back({gm, std::move(v)});
          ++i;
          ++j;
        }
      }
      std::swap(cur, next);
      pos = 0;
    }
    return Poly<F>::from_sorted_terms(f.space(), std::move(rem));
  }
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller installation of the two
/// classical criteria and sugar-degree pair selection (which is the normal
/// strategy for homogeneous input under a degree-compatible order).
///
/// Elements may be added incrementally and pairs may be processed only up to
/// a degree bound, which is what truncated computations (minimal generators
/// of homogeneous modules) need.
template <class F>
class GroebnerBuilder {
 public:
  explicit GroebnerBuilder(SpacePtr<F> space, Limits limits = {}) : space_(std::move(space)), limits_(limits) {}

  const SpacePtr<F>& space() const { return space_; }

  /// Reduces f against the current basis and inserts the remainder.
  /// Returns false if f reduced to zero.
  bool add(const Poly<F>& f) {
    if (!f.space()->same_layout(*space_)) fail(ErrorKind::MixedRing, "generator lives in a different space");
    Poly<F> h = normal_form(f).monic();
    if (h.is_zero()) return false;
    int sugar = INT_MIN;
    for (const auto& t : f.terms()) sugar = std::max(sugar, space_->degree(t.m));
    insert(std::move(h), sugar);
    return true;
  }

  /// Processes every pending pair whose sugar is at most max_sugar.
  void complete(int max_sugar = INT_MAX) {
    while (true) {
      std::size_t best = pairs_.size();
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (pairs_[p].sugar > max_sugar) continue;
        if (best == pairs_.size() || less(pairs_[p], pairs_[best])) best = p;
      }
      if (best == pairs_.size()) return;
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (++processed_ > limits_.max_pairs) fail(ErrorKind::ResourceExceeded, "S-pair cap exceeded");
      Poly<F> s = spoly(pr);
      Poly<F> h = normal_form(s).monic();
      if (!h.is_zero()) insert(std::move(h), pr.sugar);
    }
  }

  bool has_pending(int max_sugar = INT_MAX) const {
    for (const auto& p : pairs_)
      if (p.sugar <= max_sugar) return true;
    return false;
  }

  Poly<F> normal_form(const Poly<F>& f, bool full = true) const {
    std::vector<const Poly<F>*> divs;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) divs.push_back(&basis_[i]);
    return detail::Reducer<F>{divs}.reduce(f, full);
  }

  /// The reduced Groebner basis (monic, tail-reduced, sorted by increasing
  /// leading monomial). Meaningful once complete() has run without bound.
  std::vector<Poly<F>> reduced_basis() const {
    std::vector<const Poly<F>*> act;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) act.push_back(&basis_[i]);
    std::vector<Poly<F>> out;
    out.reserve(act.size());
    for (std::size_t i = 0; i < act.size(); ++i) {
      std::vector<const Poly<F>*> others;
      for (std::size_t j = 0; j < act.size(); ++j)
        if (j != i) others.push_back(act[j]);
      const Poly<F>& g = *act[i];
      std::vector<Term<F>> tail(g.terms().begin() + 1, g.terms().end());
      Poly<F> t = detail::Reducer<F>{others}.reduce(Poly<F>::from_sorted_terms(space_, std::move(tail)));
      std::vector<Term<F>> ts;
      ts.push_back(g.lead());
      ts.insert(ts.end(), t.terms().begin(), t.terms().end());
      out.push_back(Poly<F>::from_sorted_terms(space_, std::move(ts)).monic());
    }
    const auto& sp = *space_;
    std::sort(out.begin(), out.end(),
              [&](const Poly<F>& a, const Poly<F>& b) { return sp.compare(a.lead_monomial(), b.lead_monomial()) < 0; });
    return out;
  }

  std::size_t pairs_processed() const { return processed_; }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  bool less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = space_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  }

  Poly<F> spoly(const Pair& p) const {
    const Poly<F>& f = basis_[p.i];
    const Poly<F>& g = basis_[p.j];
    Poly<F> a = f.times_term(monomial_quotient(p.lcm, f.lead_monomial()), space_->field().one());
    a.subtract_multiple(space_->field().one(), monomial_quotient(p.lcm, g.lead_monomial()), g);
    return a;
  }

  void insert(Poly<F> h, int sugar) {
    const std::size_t k = basis_.size();
    const Monomial th = h.lead_monomial();
    const bool ideal = space_->rank() == 1;
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i] || basis_[i].lead_monomial().comp != th.comp) continue;
      const Monomial& ti = basis_[i].lead_monomial();
      cands.push_back({i, space_->lcm(ti, th), ideal && monomials_coprime(ti, th), true});
    }
    // Chain criterion among the new pairs; a surviving pair with an equal lcm
    // absorbs the others, and coprime pairs kill their whole lcm class.
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      Cand& c = cands[a];
      bool drop = false;
      if (!c.coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
          if (monomial_divides(cands[b].lcm, c.lcm)) drop = true;
        for (std::size_t b = 0; b < kept.size() && !drop; ++b)
          if (monomial_divides(kept[b].lcm, c.lcm)) drop = true;
      }
      if (!drop) kept.push_back(c);
    }
    // B criterion on the old pairs.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + kept.size());
    for (const auto& p : pairs_) {
      if (monomial_divides(th, p.lcm)) {
        Monomial li = space_->lcm(basis_[p.i].lead_monomial(), th);
        Monomial lj = space_->lcm(basis_[p.j].lead_monomial(), th);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      survivors.push_back(p);
    }
    for (const auto& c : kept) {
      if (c.coprime) continue;
      const Monomial& ti = basis_[c.i].lead_monomial();
      int deg_l = c.lcm.degree;
      int s = std::max(sugar_[c.i] + deg_l - ti.degree, sugar + deg_l - th.degree);
      survivors.push_back({c.i, k, c.lcm, s});
    }
    pairs_ = std::move(survivors);
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && monomial_divides(th, basis_[i].lead_monomial())) active_[i] = false;
  }

  SpacePtr<F> space_;
  Limits limits_;
  std::vector<Poly<F>> basis_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
};

/// Reduced Groebner basis of the submodule generated by `gens` (all in `space`).
template <class F>
std::vector<Poly<F>> groebner_basis(const SpacePtr<F>& space, const std::vector<Poly<F>>& gens, const Limits& limits = {}) {
  GroebnerBuilder<F> gb(space, limits);
  for (const auto& g : gens) gb.add(g);
  gb.complete();
  return gb.reduced_basis();
}

/// Remainder of f modulo a Groebner basis; zero iff f lies in the submodule.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& basis) {
  std::vector<const Poly<F>*> divs;
  divs.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.is_zero()) divs.push_back(&g);
  return detail::Reducer<F>{divs}.reduce(f);
}

/// Exact quotient h / g in the polynomial ring; NotDivisible otherwise.
template <class F>
Poly<F> divide_exact(const Poly<F>& h, const Poly<F>& g) {
  if (g.is_zero()) fail(ErrorKind::NotDivisible, "division by zero");
  const auto& k = h.field();
  Poly<F> rest = h;
  std::vector<Term<F>> quot;
  auto inv = k.inv(g.lead_coef());
  while (!rest.is_zero()) {
    if (!monomial_divides(g.lead_monomial(), rest.lead_monomial()))
      fail(ErrorKind::NotDivisible, rest.to_string() + " is not divisible by " + g.to_string());
    Monomial q = monomial_quotient(rest.lead_monomial(), g.lead_monomial());
    auto c = k.mul(rest.lead_coef(), inv);
    quot.push_back({q, c});
    rest.subtract_multiple(c, q, g);
  }
  SpacePtr<F> ring = base_ring(h.space());
  return Poly<F>::from_terms(ring, std::move(quot));
}

/// Coefficients c with sum c_j * gens_j == f. Works for ideals and for
/// submodules of free modules; the cofactors are ring elements.
template <class F>
std::vector<Poly<F>> lift_combination(const Poly<F>& f, const std::vector<Poly<F>>& gens, const Limits& limits = {}) {
  const SpacePtr<F>& sp = f.space();
  const SpacePtr<F> ring = base_ring(sp);
  const int r = sp->rank();
  const int s = static_cast<int>(gens.size());
  std::vector<Poly<F>> coeffs(s, Poly<F>::zero(ring));
  if (f.is_zero()) return coeffs;
  std::vector<int> shifts = sp->shifts();
  std::vector<int> blocks(r, 0);
  for (const auto& g : gens) {
    if (!g.space()->same_layout(*sp)) fail(ErrorKind::MixedRing, "generator lives in a different space");
    shifts.push_back(g.is_zero() ? 0 : g.degree());
    blocks.push_back(1);
  }
  auto aug = std::make_shared<const Space<F>>(sp->field(), sp->names(), sp->weights(), sp->order(), shifts, blocks);
  GroebnerBuilder<F> gb(aug, limits);
  for (int j = 0; j < s; ++j) gb.add(gens[j].moved_to(aug) + Poly<F>::basis(aug, r + j));
  gb.complete();
  Poly<F> rem = gb.normal_form(f.moved_to(aug));
  for (const auto& t : rem.terms())
    if (static_cast<int>(t.m.comp) < r) fail(ErrorKind::NotAMember, f.to_string() + " is not in the submodule");
  for (int j = 0; j < s; ++j) coeffs[j] = -rem.component(r + j, ring);
  // Re-expansion check.
  Poly<F> back = Poly<F>::zero(sp);
  for (int j = 0; j < s; ++j) back += Poly<F>::ring_times(coeffs[j], gens[j]);
  if (!(back - f).is_zero()) fail(ErrorKind::InternalInconsistency, "lift does not re-expand");
  return coeffs;
}

/// Minimal generators of a homogeneous submodule, chosen among `gens`.
/// Degree by degree: a generator is kept iff it is not in the span of the
/// lower-or-equal degree part already generated.
template <class F>
std::vector<Poly<F>> minimal_generators(const SpacePtr<F>& space, std::vector<Poly<F>> gens, const Limits& limits = {}) {
  std::erase_if(gens, [](const Poly<F>& g) { return g.is_zero(); });
  for (const auto& g : gens)
    if (!g.is_homogeneous()) fail(ErrorKind::InvalidArgument, "minimal generators need homogeneous input");
  std::stable_sort(gens.begin(), gens.end(), [](const Poly<F>& a, const Poly<F>& b) { return a.degree() < b.degree(); });
  GroebnerBuilder<F> gb(space, limits);
  std::vector<Poly<F>> out;
  for (const auto& g : gens) {
    gb.complete(g.degree());
    if (gb.add(g)) out.push_back(g);
  }
  return out;
}

}  // namespace reesgor
