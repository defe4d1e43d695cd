#include <limits>

#include <gtest/gtest.h>

#include "intercept/region.hpp"

namespace intercept {
namespace {

TEST(Region, SortsMergesAndDropsPoints) {
  const Region r({{0.6, 0.9}, {0.0, 0.2}, {0.1, 0.3}, {0.5, 0.5}});
  ASSERT_EQ(r.components(), 2u);
  EXPECT_EQ(r.intervals()[0], (Interval{0.0, 0.3}));
  EXPECT_EQ(r.intervals()[1], (Interval{0.6, 0.9}));
  EXPECT_NEAR(r.length(), 0.6, 1e-15);
}

TEST(Region, SnapClosesTinyGaps) {
  const Region r({{0.0, 0.5}, {0.5 + 1e-13, 1.0}}, 1e-12);
  ASSERT_EQ(r.components(), 1u);
  EXPECT_EQ(r.intervals()[0], (Interval{0.0, 1.0}));
}

TEST(Region, IntersectAndComplement) {
  const Region a({{0.0, 0.4}, {0.6, 1.0}});
  const Region b({{0.3, 0.7}});
  const Region i = a.intersect(b);
  ASSERT_EQ(i.components(), 2u);
  EXPECT_EQ(i.intervals()[0], (Interval{0.3, 0.4}));
  EXPECT_EQ(i.intervals()[1], (Interval{0.6, 0.7}));

  const Region c = a.complement(1.0);
  ASSERT_EQ(c.components(), 1u);
  EXPECT_EQ(c.intervals()[0], (Interval{0.4, 0.6}));
  EXPECT_TRUE(Region::full(1.0).complement(1.0).empty());
  EXPECT_EQ(Region().complement(2.0), Region::full(2.0));
}

TEST(Region, Contains) {
  const Region r({{0.0, 0.4}, {0.6, 1.0}});
  EXPECT_TRUE(r.contains(0.4));
  EXPECT_FALSE(r.contains(0.5));
  EXPECT_FALSE(r.contains_interior(0.4));
  EXPECT_TRUE(r.contains_interior(0.2, 0.1));
  EXPECT_FALSE(r.contains_interior(0.35, 0.1));
}

TEST(RegionHausdorff, Examples) {
  const Region a({{0.0, 0.5}});
  EXPECT_DOUBLE_EQ(region_hausdorff(a, a), 0.0);
  EXPECT_NEAR(region_hausdorff(a, Region({{0.0, 0.6}})), 0.1, 1e-15);
  EXPECT_NEAR(region_hausdorff(Region({{0.0, 0.2}, {0.8, 1.0}}), Region({{0.0, 0.2}})), 0.8,
              1e-15);
}

TEST(RegionHausdorff, EmptyRegions) {
  EXPECT_DOUBLE_EQ(region_hausdorff(Region(), Region()), 0.0);
  EXPECT_EQ(region_hausdorff(Region(), Region::full(1.0)),
            std::numeric_limits<double>::infinity());
}

TEST(RegionHausdorff, GapInsideOtherRegionCounts) {
  // Points of [0, 1] in the middle of the gap are 0.1 away from a.
  const Region a({{0.0, 0.4}, {0.6, 1.0}});
  EXPECT_NEAR(region_hausdorff(a, Region::full(1.0)), 0.1, 1e-15);
}

}  // namespace
}  // namespace intercept
