#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "reesgor/error.hpp"

namespace reesgor {

/// Z/p for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) fail(ErrorKind::InvalidArgument, "characteristic must be a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const {
    if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return from_int(t);
  }
  bool equal(Element a, Element b) const { return a == b; }

  /// Symmetric representative, so that p-1 prints as -1.
  std::int64_t signed_value(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(signed_value(a)); }
  bool is_negative(Element a) const { return a > p_ / 2; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
    return 1 / a;
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace reesgor
