#include <gtest/gtest.h>

#include "reesgor/corpus.hpp"
#include "reesgor/invariants.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace reesgor;
using namespace reesgor::testing;

namespace {

using Id = Ideal<F>;

Id ideal(const RingPtr<F>& a, const std::vector<std::string>& gens) { return Id(a, polys(a->ring(), gens)); }

}  // namespace

TEST(KrullDim, Examples) {
  EXPECT_EQ(krull_dim(build_regular_base<F>().ring), 2);
  EXPECT_EQ(krull_dim(build_hochster_roberts<F>().ring), 2);
  EXPECT_EQ(krull_dim(build_two_planes<F>().ring), 2);
}

TEST(DepthAndType, Examples) {
  auto r = ring("x y");
  auto hyp = make_presented_ring<F>("h", r, polys(r, {"x^2"}));
  auto h = depth_and_type(hyp);
  EXPECT_EQ(h.depth, 1);
  EXPECT_TRUE(h.cm);
  EXPECT_EQ(h.type, 1);

  for (auto inst : {build_hochster_roberts<F>(), build_two_planes<F>()}) {
    auto rep = depth_and_type(inst.ring);
    EXPECT_EQ(rep.depth, 1);
    EXPECT_FALSE(rep.cm);
    EXPECT_EQ(rep.type, 1);
  }
  auto k2 = make_presented_ring<F>("m2", r, polys(r, {"x^2", "x*y", "y^2"}));
  auto rep = depth_and_type(k2);
  EXPECT_EQ(rep.depth, 0);
  EXPECT_TRUE(rep.cm);
  EXPECT_EQ(rep.type, 2);
}

TEST(ArtinianLength, Examples) {
  auto k = build_regular_base<F>().ring;
  EXPECT_EQ(artinian_length(Id::maximal(k)), 1);
  EXPECT_EQ(artinian_length(ideal(k, {"x^2", "y^3"})), 6);
  auto hr = build_hochster_roberts<F>().ring;
  EXPECT_EQ(artinian_length(Id::maximal(hr)), 1);
  try {
    artinian_length(ideal(k, {"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotArtinian);
  }
}

TEST(Multiplicity, Examples) {
  auto k = build_regular_base<F>().ring;
  EXPECT_EQ(multiplicity(Id::maximal(k)).value, 1);
  auto tp = build_two_planes<F>().ring;
  auto em = multiplicity(Id::maximal(tp));
  EXPECT_EQ(em.value, 2);
  // Two planes meeting in a point: ℓ(A/m^n) = 2 C(n+1,2) - 1.
  for (std::size_t n = 1; n <= em.lengths.size(); ++n)
    EXPECT_EQ(em.lengths[n - 1], static_cast<std::int64_t>(n * (n + 1) - 1));
  auto hr = build_hochster_roberts<F>();
  EXPECT_EQ(multiplicity(Id(hr.ring, hr.params)).value, 2);
}

TEST(Reduction, Examples) {
  auto hr = build_hochster_roberts<F>();
  Id q(hr.ring, hr.params);
  EXPECT_EQ(is_reduction(q, q), 0);
  EXPECT_EQ(is_reduction(q, Id::maximal(hr.ring)), 1);

  auto k = build_regular_base<F>().ring;
  // (x^2, y^2) is not a reduction of (x, y): x^{r+1} ∈ m^{r+1} has degree
  // r + 1 while q m^r starts in degree r + 2. Brute-force that for every r.
  Id q2 = ideal(k, {"x^2", "y^2"});
  Id m = Id::maximal(k);
  for (int rr = 0; rr <= 10; ++rr)
    EXPECT_FALSE(ideal_product(q2, ideal_power(m, rr)).contains(poly(k->ring(), "x^" + std::to_string(rr + 1))));
  EXPECT_EQ(is_reduction(q2, m), std::nullopt);
  // It is a reduction of m^2 with reduction number 1.
  EXPECT_EQ(is_reduction(q2, ideal_power(m, 2)), 1);
  try {
    is_reduction(Id::maximal(k), ideal(k, {"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContained);
  }
}

TEST(ArtinianGorenstein, Examples) {
  auto k = build_regular_base<F>().ring;
  EXPECT_TRUE(artinian_gorenstein(ideal(k, {"x^2", "y^2"})));
  EXPECT_FALSE(artinian_gorenstein(ideal(k, {"x^2", "x*y", "y^2"})));
  auto hr = build_hochster_roberts<F>();
  const auto& a = hr.params[0];
  const auto& b = hr.params[1];
  Id ab(hr.ring, {a * b});
  Id sa = ideal_product(Id(hr.ring, {a}), colon(Id(hr.ring, {a}), b));
  Id sb = ideal_product(Id(hr.ring, {b}), colon(Id(hr.ring, {b}), a));
  EXPECT_TRUE(artinian_gorenstein(ideal_sum(ideal_sum(ab, sa), sb)));
}

TEST(Properties, ReportIdentities) {
  for (const auto& inst : corpus_instances()) {
    SCOPED_TRACE(inst.ring->name());
    auto rep = depth_and_type(inst.ring);
    EXPECT_EQ(rep.pd + rep.depth, rep.nvars);
    EXPECT_GE(rep.dim, rep.depth);
    EXPECT_EQ(rep.cm, rep.dim == rep.depth);
    Id q(inst.ring, inst.params);
    auto eq = multiplicity(q).value;
    if (rep.cm) {
      EXPECT_EQ(eq, artinian_length(q));
    }
    Id m = Id::maximal(inst.ring);
    auto red = is_reduction(q, m);
    if (red) {
      EXPECT_EQ(eq, multiplicity(m).value);
    }
  }
}

TEST(Properties, MultiplicityInvariantUnderReduction) {
  auto k = build_regular_base<F>().ring;
  Id m = Id::maximal(k);
  for (const auto& g : std::vector<std::vector<std::string>>{{"x", "y"}, {"x + y", "x - y"}}) {
    Id j = ideal(k, g);
    ASSERT_TRUE(is_reduction(j, m).has_value());
    EXPECT_EQ(multiplicity(j).value, multiplicity(m).value);
  }
  Id j = ideal(k, {"x^2", "y^2"});
  Id big = ideal(k, {"x^2", "x*y", "y^2"});
  ASSERT_TRUE(is_reduction(j, big).has_value());
  EXPECT_EQ(multiplicity(j).value, multiplicity(big).value);
  EXPECT_EQ(multiplicity(big).value, 4);
}
