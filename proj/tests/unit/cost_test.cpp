#include <cmath>

#include <gtest/gtest.h>

#include "intercept/cost.hpp"
#include "intercept/errors.hpp"
#include "intercept/oracles.hpp"

namespace intercept {
namespace {

TEST(ConstrainedTime, Examples) {
  EXPECT_DOUBLE_EQ(constrained_time({0.0, 1.0}, 0.0, 0.0), 1.0);
  EXPECT_NEAR(constrained_time({0.0, 0.75}, 0.0, 0.5), 0.5, 1e-15);
  for (double x : {0.0, 0.3, 1.0}) {
    for (double v : {0.1, 0.5, 0.9}) {
      EXPECT_EQ(constrained_time({x, 0.0}, x, v), 0.0);
    }
  }
}

TEST(ConstrainedTime, EuclideanAtZeroSpeed) {
  EXPECT_NEAR(constrained_time({0.3, 0.4}, 0.0, 0.0), 0.5, 1e-15);
}

TEST(ConstrainedTime, NonNegative) {
  for (double y : {0.0, 0.1, 1.0, 10.0}) {
    for (double v : {0.0, 0.5, 0.99}) {
      EXPECT_GE(constrained_time({0.5, y}, 0.5, v), 0.0);
      EXPECT_GE(constrained_time({0.2, y}, 0.9, v), 0.0);
    }
  }
}

TEST(ConstrainedTime, GameParamsOverloadMatches) {
  const GameParams g(1.0, 0.5);
  EXPECT_EQ(constrained_time({0.2, 0.7}, 0.4, g), constrained_time({0.2, 0.7}, 0.4, 0.5));
}

TEST(GenericCost, Examples) {
  EXPECT_DOUBLE_EQ(generic_cost({0.0, 1.0}, 0.0, CostCoeffs(1.0, 1.0, 0.0)), 1.0);
  EXPECT_NEAR(generic_cost({0.0, 0.75}, 0.0, CostCoeffs(1.0 / 0.75, 0.75, 0.5 / 0.75)), 0.5,
              1e-15);
  EXPECT_DOUBLE_EQ(generic_cost({3.0, 4.0}, 0.0, CostCoeffs(2.0, 1.0, 1.0)), 6.0);
}

TEST(GenericCost, InstanceConsistencyIsExact) {
  for (double v : {0.0, 0.1, 0.5, 0.95}) {
    const CostCoeffs k = CostCoeffs::constrained_time(v);
    for (double y : {0.0, 0.3, 2.0}) {
      EXPECT_EQ(constrained_time({0.1, y}, 0.7, v), generic_cost({0.1, y}, 0.7, k));
    }
  }
}

TEST(CostCoeffs, Factories) {
  const CostCoeffs t = CostCoeffs::constrained_time(0.5);
  EXPECT_DOUBLE_EQ(t.a(), 1.0 / 0.75);
  EXPECT_DOUBLE_EQ(t.b(), 0.75);
  EXPECT_DOUBLE_EQ(t.c(), 0.5 / 0.75);
  const CostCoeffs h = CostCoeffs::vertical_height(0.5);
  EXPECT_DOUBLE_EQ(h.a(), 0.5 / 0.75);
  EXPECT_DOUBLE_EQ(h.b(), 1.0);
  EXPECT_DOUBLE_EQ(h.c(), 0.25 / 0.75);
}

TEST(CostCoeffs, Validation) {
  EXPECT_THROW(CostCoeffs(1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(CostCoeffs(1.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(CostCoeffs(1.0, 1.0, -0.1), DomainError);
  EXPECT_THROW(CostCoeffs::constrained_time(1.0), DomainError);
  EXPECT_THROW(CostCoeffs::vertical_height(0.0), DomainError);
}

TEST(GameParams, Validation) {
  EXPECT_NO_THROW(GameParams(1.0, 0.5));
  EXPECT_THROW(GameParams(1.0, 0.0), DomainError);
  EXPECT_THROW(GameParams(1.0, 1.0), DomainError);
  EXPECT_THROW(GameParams(0.0, 0.5), DomainError);
}

TEST(GenericCostGradient, MatchesFiniteDifference) {
  const CostCoeffs k = CostCoeffs::constrained_time(0.6);
  for (const Vec2 p : {Vec2{0.2, 0.5}, Vec2{0.9, 0.05}, Vec2{0.4, 2.0}}) {
    const Vec2 fd = oracles::central_difference(
        [&](Vec2 q) { return generic_cost(q, 0.45, k); }, p, 1e-6);
    const Vec2 g = generic_cost_gradient(p, 0.45, k);
    EXPECT_NEAR(g.x, fd.x, 1e-8);
    EXPECT_NEAR(g.y, fd.y, 1e-8);
  }
}

TEST(GenericCostGradient, SingularAtTarget) {
  EXPECT_THROW(generic_cost_gradient({0.4, 0.0}, 0.4, CostCoeffs::constrained_time(0.5)),
               SingularityError);
}

}  // namespace
}  // namespace intercept
