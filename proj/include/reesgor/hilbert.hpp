#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reesgor/error.hpp"

namespace reesgor {

/// Univariate polynomial with integer coefficients; index i holds t^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  static IntPoly one() { return IntPoly({1}); }
  /// 1 - t^w
  static IntPoly one_minus_power(int w) {
    std::vector<std::int64_t> c(w + 1, 0);
    c[0] = 1;
    c[w] -= 1;
    return IntPoly(std::move(c));
  }
  static IntPoly monomial(int e, std::int64_t coef = 1) {
    std::vector<std::int64_t> c(e + 1, 0);
    c[e] = coef;
    return IntPoly(std::move(c));
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  std::int64_t value_at_one() const {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Exact division by 1 - t^w; throws if the remainder is nonzero.
  IntPoly divided_by_one_minus_power(int w) const {
    // q(t) (1 - t^w) = p(t)  =>  q_i = p_i + q_{i-w}
    if (is_zero()) return {};
    const int n = degree();
    if (n < w) fail(ErrorKind::InternalInconsistency, "inexact Hilbert series division");
    std::vector<std::int64_t> q(n - w + 1, 0);
    for (int i = 0; i <= n - w; ++i) q[i] = c_[i] + (i >= w ? q[i - w] : 0);
    IntPoly back = IntPoly(q) * one_minus_power(w);
    if (!(back == *this)) fail(ErrorKind::InternalInconsistency, "inexact Hilbert series division");
    return IntPoly(std::move(q));
  }

  /// Multiplicity of t = 1 as a root.
  int order_at_one() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "order of the zero polynomial");
    IntPoly p = *this;
    int k = 0;
    while (p.value_at_one() == 0) {
      p = p.divided_by_one_minus_power(1);
      ++k;
    }
    return k;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      std::int64_t v = c_[i];
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      std::int64_t a = v < 0 ? -v : v;
      if (i == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "t";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// Monomial ideal given by exponent vectors (all of one length).
using MonomialList = std::vector<std::vector<int>>;

namespace detail {

inline bool exps_divide(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MonomialList minimalize(MonomialList gens) {
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialList out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (exps_divide(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

inline IntPoly hilbert_numerator_rec(MonomialList gens, std::span<const int> weights) {
  gens = minimalize(std::move(gens));
  const std::size_t n = weights.size();
  if (gens.empty()) return IntPoly::one();
  IntPoly base = IntPoly::one();
  std::vector<int> count(n, 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    int support = 0;
    for (std::size_t i = 0; i < n; ++i) support += g[i] > 0;
    if (support == 0) return {};  // unit ideal
    if (support == 1) continue;
    all_pure = false;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++count[i];
  }
  if (all_pure) {
    for (const auto& g : gens)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i]) base = base * IntPoly::one_minus_power(g[i] * weights[i]);
    return base;
  }
  // Pivot on the variable occurring in the most mixed generators, at the
  // smallest positive exponent it takes there.
  std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = 0;
  for (const auto& g : gens) {
    int support = 0;
    for (std::size_t i = 0; i < n; ++i) support += g[i] > 0;
    if (support > 1 && g[v] > 0 && (e == 0 || g[v] < e)) e = g[v];
  }
  MonomialList plus = gens;
  std::vector<int> p(n, 0);
  p[v] = e;
  plus.push_back(p);
  MonomialList colon;
  colon.reserve(gens.size());
  for (auto g : gens) {
    g[v] = std::max(0, g[v] - e);
    colon.push_back(std::move(g));
  }
  return hilbert_numerator_rec(std::move(plus), weights) +
         IntPoly::monomial(e * weights[v]) * hilbert_numerator_rec(std::move(colon), weights);
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series of P/lead, where the series equals
/// N(t) / prod_i (1 - t^{w_i}). Pivot recursion
/// N(I) = N(I + (p)) + t^{deg p} N(I : p).
inline IntPoly hilbert_numerator(const MonomialList& lead, std::span<const int> weights) {
  for (int w : weights)
    if (w <= 0) fail(ErrorKind::NonPositiveWeight, "Hilbert series needs positive weights");
  for (const auto& g : lead)
    if (g.size() != weights.size()) fail(ErrorKind::InvalidArgument, "exponent vector length mismatch");
  return detail::hilbert_numerator_rec(lead, weights);
}

/// Krull dimension of P/lead read off the numerator: the pole order at t = 1.
/// The zero ring has dimension -1.
inline int dimension_from_numerator(const IntPoly& num, std::size_t nvars) {
  if (num.is_zero()) return -1;
  return static_cast<int>(nvars) - num.order_at_one();
}

/// For a finite-length quotient the series is a polynomial; returns it.
inline IntPoly series_polynomial(const IntPoly& num, std::span<const int> weights) {
  IntPoly q = num;
  for (int w : weights) q = q.divided_by_one_minus_power(w);
  return q;
}

/// First `upto + 1` coefficients of N(t) / prod (1 - t^{w_i}).
inline std::vector<std::int64_t> series_coefficients(const IntPoly& num, std::span<const int> weights, int upto) {
  std::vector<std::int64_t> s(upto + 1, 0);
  for (int i = 0; i <= upto && i <= num.degree(); ++i) s[i] = num[i];
  for (int w : weights)
    for (int i = w; i <= upto; ++i) s[i] += s[i - w];
  return s;
}

}  // namespace reesgor
