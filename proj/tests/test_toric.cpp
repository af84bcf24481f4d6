#include <gtest/gtest.h>

#include "mcs/error.hpp"
#include "mcs/toric.hpp"
#include "support/oracles.hpp"

using namespace mcs;

namespace {

std::size_t picard_rank(const Fan& fan) {
  std::vector<oracle::Row> rows(fan.rays().begin(), fan.rays().end());
  return fan.rays().size() - oracle::determinantal_invariants(rows).size();
}

} // namespace

TEST(Fan, ProjectivePlaneFaces) {
  auto f = projective_space_fan(2);
  EXPECT_EQ(f.cones_of_dim(0).size(), 1u);
  EXPECT_EQ(f.cones_of_dim(1).size(), 3u);
  EXPECT_EQ(f.cones_of_dim(2).size(), 3u);
  for (const auto& c : f.maximal_cones())
    EXPECT_TRUE(f.is_smooth(c));
}

TEST(Fan, RejectsMissingCone) {
  EXPECT_THROW(Fan::validate({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}), FanError);
}

TEST(Fan, RejectsNonPrimitiveRay) {
  EXPECT_THROW(Fan::validate({{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}), FanError);
}

TEST(Fan, RejectsDuplicateRay) {
  EXPECT_THROW(Fan::validate({{1, 0}, {1, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}), FanError);
}

TEST(Fan, RejectsOverlappingCones) {
  // (1,1) lies inside cone{(1,0),(0,1)}; cone{(1,0),(1,1)} overlaps it.
  EXPECT_THROW(Fan::validate({{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
                             {{0, 1}, {1, 2}, {0, 2}, {0, 3}}),
               FanError);
}

TEST(Fan, RejectsNonStronglyConvexCone) {
  EXPECT_THROW(Fan::validate({{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                             {{0, 1, 2}, {0, 1, 3}}),
               FanError);
}

TEST(Fan, RejectsLowDimensionalCone) {
  EXPECT_THROW(Fan::validate({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1}}), FanError);
}

TEST(Fan, ProductAndBlowupAreComplete) {
  auto p = product_fan(projective_space_fan(1), projective_space_fan(2));
  EXPECT_EQ(p.dim(), 3u);
  EXPECT_EQ(p.maximal_cones().size(), 6u);
  auto b = blowup_at_fixed_point(projective_space_fan(2), {0, 1}, "E");
  EXPECT_EQ(b.rays().size(), 4u);
  EXPECT_EQ(b.maximal_cones().size(), 4u);
  EXPECT_THROW(blowup_at_fixed_point(projective_space_fan(2), {0}), BlowupError);
}

TEST(Fan, HirzebruchSmooth) {
  for (std::int64_t a : {0, 1, 2, 5}) {
    auto f = hirzebruch_fan(a);
    for (const auto& c : f.maximal_cones())
      EXPECT_TRUE(f.is_smooth(c));
  }
}

TEST(Chow, PicardRankMatchesGcdOracle) {
  std::vector<Fan> fans{projective_space_fan(1), projective_space_fan(2), projective_space_fan(3),
                        hirzebruch_fan(1),       hirzebruch_fan(3),       three_point_blowup_fan(),
                        product_fan(projective_space_fan(1), projective_space_fan(1))};
  for (const auto& f : fans) {
    auto c = chow_presentation(f, f.dim() - 1);
    EXPECT_EQ(c.monoid->group().free_rank(), picard_rank(f));
    EXPECT_TRUE(c.monoid->group().torsion_invariants().empty());
    EXPECT_EQ(c.orbit_cones.size(), f.rays().size());
  }
}

TEST(Chow, PointClassesAreAllEqual) {
  for (const auto& f : {projective_space_fan(2), hirzebruch_fan(2), three_point_blowup_fan()}) {
    auto c = chow_presentation(f, 0);
    EXPECT_EQ(c.monoid->group().free_rank(), 1u);
    for (const auto& g : c.monoid->generators())
      EXPECT_EQ(g, c.monoid->generator(0));
  }
}

TEST(Chow, LinesInProjectiveSpaceAreEquivalent) {
  auto f = projective_space_fan(3);
  auto c = chow_presentation(f, 1);
  EXPECT_EQ(c.monoid->group().free_rank(), 1u);
  EXPECT_EQ(c.orbit_cones.size(), 6u);
  for (const auto& cone : c.orbit_cones)
    EXPECT_EQ(degree_class(f, cone, 1), c.monoid->generator(0));
}

TEST(Chow, DegreeClassNeedsMatchingDimension) {
  auto f = projective_space_fan(2);
  EXPECT_THROW(degree_class(f, {0, 1}, 1), DimensionError);
}

TEST(Chow, ThreePointBlowupDivisorRelations) {
  auto f = three_point_blowup_fan();
  auto c = chow_presentation(f, 1);
  const auto& m = *c.monoid;
  auto cls = [&](std::size_t ray) { return c.class_of_orbit.at(Cone{ray}); };
  // Principal divisors of the characters (1,0) and (0,1).
  EXPECT_EQ(m.add(cls(0), cls(4)), m.add(cls(1), cls(3)));
  EXPECT_EQ(m.add(cls(0), cls(5)), m.add(cls(2), cls(3)));
  EXPECT_NE(cls(0), cls(3));
}

TEST(Series, ProjectiveSpaceDivisorsMatchConvolution) {
  auto ring = KRingSpec::standard();
  for (std::size_t n = 1; n <= 3; ++n) {
    auto f = rational_expand(mc_series_toric(projective_space_fan(n), n - 1, ring), 8);
    auto want = oracle::dense_geometric_power(static_cast<unsigned>(n + 1), 8);
    for (std::int64_t d = 0; d <= 8; ++d)
      EXPECT_EQ(f.coefficient(f.monoid()->scale(f.monoid()->generator(0), d)), KElement(ring, want[d]));
  }
}

TEST(Series, CoefficientsCountFactorizations) {
  auto ring = KRingSpec::standard();
  auto fan = three_point_blowup_fan();
  auto classes = chow_presentation(fan, 1);
  auto f = rational_expand(mc_series_toric(classes, ring), 3);
  for (const auto& [s, deg] : classes.monoid->enumerate(3))
    EXPECT_EQ(f.coefficient(s), KElement(ring, oracle::factorization_count(*classes.monoid, s)));
}

TEST(Series, PointCycleSeriesIsEulerCharacteristicPower) {
  auto ring = KRingSpec::standard();
  for (const auto& f : {projective_space_fan(2), hirzebruch_fan(1), three_point_blowup_fan()}) {
    auto mc = mc_series_toric(f, 0, ring);
    auto chi = static_cast<unsigned>(f.maximal_cones().size());
    EXPECT_TRUE(rational_equal(mc, RationalSeries::geometric(mc.monoid(), ring, mc.monoid()->generator(0), chi)));
  }
}

TEST(DivisorSeries, CoefficientsAreProjectiveSpacesOfMonomials) {
  auto ring = KRingSpec::standard();
  for (unsigned n = 1; n <= 3; ++n) {
    auto f = pn_divisor_series(n, 6, ring);
    for (std::int64_t d = 0; d <= 6; ++d) {
      std::int64_t monomials = 0;
      oracle::for_each_word(std::vector<std::int64_t>(n + 1, 1), d, [&](const std::vector<std::int64_t>& w) {
        std::int64_t s = 0;
        for (auto x : w)
          s += x;
        monomials += s == d;
      });
      auto cls = f.monoid()->scale(f.monoid()->generator(0), d);
      EXPECT_EQ(f.coefficient(cls), class_projective_space(ring, static_cast<unsigned>(monomials - 1)));
    }
  }
}
