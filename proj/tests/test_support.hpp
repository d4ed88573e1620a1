#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reesgor/groebner.hpp"
#include "reesgor/parse.hpp"
#include "reesgor/polynomial.hpp"

namespace reesgor::testing {

using F = PrimeField;
using P = Poly<F>;

/// "x:1 y:2" -> ring with those variables and weights; bare names get weight 1.
inline SpacePtr<F> ring(const std::string& spec, MonomialOrder order = {}, F field = F(32003)) {
  std::istringstream in(spec);
  std::string tok;
  std::vector<std::string> names;
  std::vector<int> weights;
  while (in >> tok) {
    auto colon = tok.find(':');
    names.push_back(tok.substr(0, colon));
    weights.push_back(colon == std::string::npos ? 1 : std::stoi(tok.substr(colon + 1)));
  }
  return make_ring(field, names, weights, order);
}

inline P poly(const SpacePtr<F>& r, const std::string& text) { return parse_poly(r, text); }

inline std::vector<P> polys(const SpacePtr<F>& r, const std::vector<std::string>& texts) {
  std::vector<P> out;
  for (const auto& t : texts) out.push_back(parse_poly(r, t));
  return out;
}

/// Random homogeneous combination sum c_i * m_i * g_i with m_i monomials of
/// small degree; deterministic in the generator.
inline P random_combination(const std::vector<P>& gens, std::mt19937_64& rng) {
  const auto& sp = gens.front().space();
  P acc = P::zero(sp);
  std::uniform_int_distribution<int> coef(1, 100);
  std::uniform_int_distribution<int> exp(0, 2);
  for (const auto& g : gens) {
    std::vector<int> e(sp->nvars());
    for (auto& v : e) v = exp(rng);
    acc += g.times_term(sp->make_monomial(e), sp->field().from_int(coef(rng)));
  }
  return acc;
}

}  // namespace reesgor::testing
