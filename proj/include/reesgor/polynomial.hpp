#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reesgor/error.hpp"
#include "reesgor/field.hpp"

namespace reesgor {

inline constexpr int kMaxVars = 32;

/// A power product, optionally tagged with a free-module component.
/// Ring elements always live in component 0.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t degree = 0;  // weighted degree of exp; module shifts are not included
  std::uint32_t comp = 0;
  std::uint32_t mask = 0;  // bit i set iff exp[i] > 0

  bool operator==(const Monomial& o) const { return comp == o.comp && exp == o.exp; }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = static_cast<unsigned>(a.exp[i]) + b.exp[i];
    if (s > 0xFFFF) fail(ErrorKind::ResourceExceeded, "exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  r.degree = a.degree + b.degree;
  r.comp = a.comp + b.comp;  // at most one side is a module monomial
  r.mask = a.mask | b.mask;
  return r;
}

/// True if a divides b (same component, exponentwise <=).
inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  if (a.comp != b.comp || (a.mask & ~b.mask) != 0) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a as a ring monomial; requires monomial_divides(a, b).
inline Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
    if (r.exp[i]) r.mask |= 1u << i;
  }
  r.degree = b.degree - a.degree;
  return r;
}

inline bool monomials_coprime(const Monomial& a, const Monomial& b) { return (a.mask & b.mask) == 0; }

enum class OrderKind { WeightedRevLex, Lex, Elimination };

/// Ring monomial order. For Elimination, `eliminated` marks the block of
/// variables that must be greater than everything outside it.
struct MonomialOrder {
  OrderKind kind = OrderKind::WeightedRevLex;
  std::uint32_t eliminated = 0;

  bool operator==(const MonomialOrder&) const = default;
};

/// Ambient data for polynomials and free-module elements: variables, weights,
/// coefficient field, monomial order, and (for rank > 1) component shifts and
/// position blocks. A polynomial ring is the rank-1 space with shift 0.
///
/// Module order: lower block index first (position over term across blocks),
/// then the ring order with component shifts added to degrees, then lower
/// component index first.
template <class F>
class Space {
 public:
  Space(F field, std::vector<std::string> names, std::vector<int> weights, MonomialOrder order,
        std::vector<int> shifts = {0}, std::vector<int> blocks = {})
      : field_(std::move(field)),
        names_(std::move(names)),
        weights_(std::move(weights)),
        order_(order),
        shifts_(std::move(shifts)),
        blocks_(std::move(blocks)) {
    if (names_.size() != weights_.size()) fail(ErrorKind::InvalidArgument, "names and weights differ in length");
    if (names_.size() > static_cast<std::size_t>(kMaxVars))
      fail(ErrorKind::ResourceExceeded, "too many variables (max " + std::to_string(kMaxVars) + ")");
    for (int w : weights_)
      if (w <= 0) fail(ErrorKind::NonPositiveWeight, "variable weights must be positive");
    if (shifts_.empty()) fail(ErrorKind::InvalidArgument, "free module of rank 0");
    if (blocks_.empty()) blocks_.assign(shifts_.size(), 0);
    if (blocks_.size() != shifts_.size()) fail(ErrorKind::InvalidArgument, "blocks and shifts differ in length");
  }

  const F& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  int rank() const { return static_cast<int>(shifts_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& shifts() const { return shifts_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int shift(std::uint32_t comp) const { return shifts_[comp]; }

  /// Degree of a monomial including its component shift.
  int degree(const Monomial& m) const { return m.degree + shifts_[m.comp]; }

  int compare(const Monomial& a, const Monomial& b) const {
    if (blocks_[a.comp] != blocks_[b.comp]) return blocks_[a.comp] < blocks_[b.comp] ? 1 : -1;
    const int n = nvars();
    switch (order_.kind) {
      case OrderKind::Lex:
        for (int i = 0; i < n; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        break;
      case OrderKind::Elimination: {
        int ea = 0, eb = 0;
        for (int i = 0; i < n; ++i)
          if (order_.eliminated >> i & 1u) {
            ea += a.exp[i] * weights_[i];
            eb += b.exp[i] * weights_[i];
          }
        if (ea != eb) return ea > eb ? 1 : -1;
        [[fallthrough]];
      }
      case OrderKind::WeightedRevLex: {
        int da = degree(a), db = degree(b);
        if (da != db) return da > db ? 1 : -1;
        for (int i = n - 1; i >= 0; --i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
        break;
      }
    }
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  /// Same variables, weights and field (orders and module data may differ).
  bool same_ring(const Space& o) const {
    return this == &o || (field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_);
  }
  bool same_layout(const Space& o) const {
    return this == &o || (same_ring(o) && order_ == o.order_ && shifts_ == o.shifts_ && blocks_ == o.blocks_);
  }

  Monomial make_monomial(std::span<const int> exps, std::uint32_t comp = 0) const {
    Monomial m;
    m.comp = comp;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 0xFFFF) fail(ErrorKind::InvalidArgument, "exponent out of range");
      m.exp[i] = static_cast<std::uint16_t>(exps[i]);
      if (exps[i]) m.mask |= 1u << i;
      m.degree += exps[i] * weights_[i];
    }
    return m;
  }

  Monomial lcm(const Monomial& a, const Monomial& b) const {
    Monomial r;
    r.comp = a.comp;
    for (int i = 0; i < nvars(); ++i) {
      r.exp[i] = std::max(a.exp[i], b.exp[i]);
      r.degree += r.exp[i] * weights_[i];
    }
    r.mask = a.mask | b.mask;
    return r;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.exp[i]) continue;
      if (!s.empty()) s += "*";
      s += names_[i];
      if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
    }
    return s;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
  std::vector<int> shifts_;
  std::vector<int> blocks_;
};

template <class F>
using SpacePtr = std::shared_ptr<const Space<F>>;

template <class F>
SpacePtr<F> make_ring(F field, std::vector<std::string> names, std::vector<int> weights,
                      MonomialOrder order = {}) {
  return std::make_shared<const Space<F>>(std::move(field), std::move(names), std::move(weights), order);
}

/// The rank-1 ring underlying a space, with the given order.
template <class F>
SpacePtr<F> ring_with_order(const SpacePtr<F>& s, MonomialOrder order) {
  return make_ring(s->field(), s->names(), s->weights(), order);
}

template <class F>
SpacePtr<F> base_ring(const SpacePtr<F>& s) {
  if (s->rank() == 1 && s->shift(0) == 0) return s;
  return ring_with_order(s, s->order());
}

template <class F>
SpacePtr<F> make_free_module(const SpacePtr<F>& ring, std::vector<int> shifts, std::vector<int> blocks = {}) {
  return std::make_shared<const Space<F>>(ring->field(), ring->names(), ring->weights(), ring->order(),
                                          std::move(shifts), std::move(blocks));
}

template <class F>
struct Term {
  Monomial m;
  typename F::Element c;
};

/// Polynomial, or free-module element when the space has rank > 1.
/// Terms are kept strictly decreasing under the space order with nonzero
/// coefficients; the zero element has no terms.
template <class F>
class Poly {
 public:
  using Coef = typename F::Element;

  Poly() = default;
  explicit Poly(SpacePtr<F> space) : space_(std::move(space)) {}

  static Poly zero(const SpacePtr<F>& s) { return Poly(s); }

  static Poly constant(const SpacePtr<F>& s, const Coef& c, std::uint32_t comp = 0) {
    Poly p(s);
    if (!s->field().is_zero(c)) {
      Monomial m;
      m.comp = comp;
      p.terms_.push_back({m, c});
    }
    return p;
  }
  static Poly constant(const SpacePtr<F>& s, std::int64_t c) { return constant(s, s->field().from_int(c)); }

  static Poly basis(const SpacePtr<F>& s, std::uint32_t comp) { return constant(s, s->field().one(), comp); }

  static Poly variable(const SpacePtr<F>& s, int i) {
    if (i < 0 || i >= s->nvars()) fail(ErrorKind::InvalidArgument, "variable index out of range");
    std::vector<int> e(s->nvars(), 0);
    e[i] = 1;
    Poly p(s);
    p.terms_.push_back({s->make_monomial(e), s->field().one()});
    return p;
  }

  static Poly monomial(const SpacePtr<F>& s, const Monomial& m, const Coef& c) {
    Poly p(s);
    if (!s->field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from arbitrary terms (sorted and combined here).
  static Poly from_terms(const SpacePtr<F>& s, std::vector<Term<F>> terms) {
    Poly p(s);
    const auto& sp = *s;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return sp.compare(a.m, b.m) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c = sp.field().add(p.terms_.back().c, t.c);
        if (sp.field().is_zero(p.terms_.back().c)) p.terms_.pop_back();
      } else if (!sp.field().is_zero(t.c)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Terms already strictly decreasing with nonzero coefficients.
  static Poly from_sorted_terms(const SpacePtr<F>& s, std::vector<Term<F>> terms) {
    Poly p(s);
    p.terms_ = std::move(terms);
    return p;
  }

  const SpacePtr<F>& space() const { return space_; }
  const F& field() const { return space_->field(); }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term<F>& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const Coef& lead_coef() const { return terms_.front().c; }

  /// Degree of the leading term, shifts included.
  int degree() const { return space_->degree(lead_monomial()); }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (space_->degree(t.m) != degree()) return false;
    return true;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().m.mask == 0);
  }

  /// True if some variable from the mask occurs.
  bool involves(std::uint32_t var_mask) const {
    for (const auto& t : terms_)
      if (t.m.mask & var_mask) return true;
    return false;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = field().neg(t.c);
    return r;
  }

  Poly scaled(const Coef& c) const {
    if (field().is_zero(c)) return Poly(space_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c = field().mul(t.c, c);
    return r;
  }

  Poly monic() const {
    if (is_zero() || field().is_one(lead_coef())) return *this;
    return scaled(field().inv(lead_coef()));
  }

  /// this * (c * m) for a ring monomial m (component 0).
  Poly times_term(const Monomial& m, const Coef& c) const {
    Poly r(space_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({monomial_product(t.m, m), field().mul(t.c, c)});
    return r;
  }

  /// this - c*m*g, where m is a ring monomial; the core reduction step.
  void subtract_multiple(const Coef& c, const Monomial& m, const Poly& g) {
    const auto& sp = *space_;
    const auto& k = sp.field();
    std::vector<Term<F>> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = monomial_product(g.terms_[j].m, m);
      int cmp = i < terms_.size() ? sp.compare(terms_[i].m, gm) : -1;
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({gm, k.neg(k.mul(c, g.terms_[j].c))});
        ++j;
      } else {
        auto v = k.sub(terms_[i].c, k.mul(c, g.terms_[j].c));
        if (!k.is_zero(v)) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_layout(a, b);
    Poly r = a;
    r.subtract_multiple(a.field().neg(a.field().one()), Monomial{}, b);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check_layout(a, b);
    Poly r = a;
    r.subtract_multiple(a.field().one(), Monomial{}, b);
    return r;
  }
  /// Product of two ring elements, or of a ring element with a module element.
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (!a.space_ || !b.space_ || !a.space_->same_ring(*b.space_))
      fail(ErrorKind::MixedRing, "operands belong to different rings");
    if (a.space_->rank() > 1 && b.space_->rank() > 1) fail(ErrorKind::InvalidArgument, "product of two module elements");
    if (a.space_->rank() > 1) return ring_times(b, a);
    if (b.space_->rank() > 1) return ring_times(a, b);
    if (!a.space_->same_layout(*b.space_)) fail(ErrorKind::MixedRing, "operands use different monomial orders");
    return ring_times(a, b);
  }

  /// r * v where r is a ring element; the result lives in v's space.
  static Poly ring_times(const Poly& r, const Poly& v) {
    if (!r.space_ || !v.space_ || !r.space_->same_ring(*v.space_))
      fail(ErrorKind::MixedRing, "operands belong to different rings");
    for (const auto& t : r.terms_)
      if (t.m.comp != 0) fail(ErrorKind::InvalidArgument, "ring factor has a component");
    if (r.size() == 1) return v.times_term(r.terms_[0].m, r.terms_[0].c);
    std::vector<Term<F>> all;
    all.reserve(r.size() * v.size());
    const auto& k = v.field();
    for (const auto& s : r.terms_)
      for (const auto& t : v.terms_) all.push_back({monomial_product(t.m, s.m), k.mul(s.c, t.c)});
    return from_terms(v.space_, std::move(all));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].m == o.terms_[i].m) || !field().equal(terms_[i].c, o.terms_[i].c)) return false;
    return true;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(space_, field().one());
    Poly b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  /// Re-sorts the terms under another space with the same variables.
  /// Components are remapped by `comp_offset`.
  Poly moved_to(const SpacePtr<F>& target, int comp_offset = 0) const {
    if (!space_->same_ring(*target)) fail(ErrorKind::MixedRing, "cannot move element between different rings");
    std::vector<Term<F>> ts = terms_;
    for (auto& t : ts) t.m.comp = static_cast<std::uint32_t>(static_cast<int>(t.m.comp) + comp_offset);
    return from_terms(target, std::move(ts));
  }

  /// Coefficient vector view: the part living in component `comp`, as a ring element.
  Poly component(std::uint32_t comp, const SpacePtr<F>& ring) const {
    std::vector<Term<F>> ts;
    for (const auto& t : terms_)
      if (t.m.comp == comp) {
        ts.push_back(t);
        ts.back().m.comp = 0;
      }
    return from_terms(ring, std::move(ts));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const auto& k = field();
    const bool module = space_->rank() > 1;
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      std::string mono = space_->monomial_string(t.m);
      bool neg = k.is_negative(t.c);
      auto absc = neg ? k.neg(t.c) : t.c;
      std::string coef = k.to_string(absc);
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      if (mono.empty()) {
        s += coef;
      } else {
        if (!k.is_one(absc)) s += coef + "*";
        s += mono;
      }
      if (module) s += "*e" + std::to_string(t.m.comp);
    }
    return s;
  }

 private:
  static void check_layout(const Poly& a, const Poly& b) {
    if (!a.space_ || !b.space_ || !a.space_->same_layout(*b.space_))
      fail(ErrorKind::MixedRing, "operands belong to different rings or modules");
  }

  SpacePtr<F> space_;
  std::vector<Term<F>> terms_;
};

/// Substitutes images[i] for variable i. Images must share one target space
/// (rank 1), and `f` must be a ring element.
template <class F>
Poly<F> substitute(const Poly<F>& f, const std::vector<Poly<F>>& images, const SpacePtr<F>& target) {
  if (static_cast<int>(images.size()) != f.space()->nvars())
    fail(ErrorKind::InvalidArgument, "substitution needs one image per variable");
  const int n = f.space()->nvars();
  std::vector<std::vector<Poly<F>>> powers(n);
  Poly<F> result = Poly<F>::zero(target);
  for (const auto& t : f.terms()) {
    Poly<F> term = Poly<F>::constant(target, t.c);
    for (int i = 0; i < n; ++i) {
      const unsigned e = t.m.exp[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly<F>::constant(target, f.field().one()));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

}  // namespace reesgor
