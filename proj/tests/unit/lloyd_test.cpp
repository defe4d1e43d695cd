#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "intercept/app/sampling.hpp"
#include "intercept/errors.hpp"
#include "intercept/lloyd.hpp"
#include "intercept/oracles.hpp"
#include "intercept/single_vehicle.hpp"

namespace intercept {
namespace {

using testing::ramp;

const GameParams kParams(1.0, 0.5);

TEST(Configuration, Validation) {
  EXPECT_NO_THROW((Configuration{{{0.2, 0.3}, {0.4, 0.3}}, kParams}.validate()));
  EXPECT_THROW((Configuration{{{0.2, 0.3}, {0.2, 0.3}}, kParams}.validate()),
               CoincidentVehiclesError);
  EXPECT_THROW((Configuration{{{0.2, -0.1}}, kParams}.validate()), DomainError);
  EXPECT_THROW((Configuration{{}, kParams}.validate()), DomainError);
}

TEST(ExpectedTimeMulti, MirrorSymmetricIsTwiceOneSide) {
  const Density u = Density::uniform(1.0);
  const Configuration c{{{0.3, 0.2}, {0.7, 0.2}}, kParams};
  const CostCoeffs k = CostCoeffs::constrained_time(0.5);
  const double half = expected_cost({0.3, 0.2}, k, u, Region({{0.0, 0.5}}));
  EXPECT_NEAR(expected_time_multi(c, u), 2.0 * half, 1e-14);
}

TEST(ExpectedTimeMulti, MatchesRiemannSumOfMinimum) {
  const Density d = ramp();
  const Configuration c{{{0.15, 0.1}, {0.5, 0.3}, {0.85, 0.05}}, kParams};
  const double oracle = oracles::midpoint_sum(
      d,
      [&](double x) {
        return constrained_time(c.positions[oracles::argmin_vehicle(c.positions, x, 0.5)], x,
                                0.5);
      },
      0.0, 1.0, 1e-5);
  EXPECT_NEAR(expected_time_multi(c, d), oracle, 1e-6);
}

TEST(ExpectedTimeMulti, EmptyRegionContributesNothing) {
  const Density d = ramp();
  const Configuration two{{{0.2, 0.1}, {0.7, 0.2}}, kParams};
  const Configuration three{{{0.2, 0.1}, {0.7, 0.2}, {0.5, 1000.0}}, kParams};
  EXPECT_NEAR(expected_time_multi(three, d), expected_time_multi(two, d), 1e-9);
}

TEST(ExpectedTimeMulti, EqualsPointwiseMinimum) {
  app::Sampler sampler(3);
  for (int s = 0; s < 20; ++s) {
    const Configuration c{sampler.configuration(2 + s % 3, 1.0, 0.0, 1.0, 1e-2), kParams};
    EXPECT_NEAR(expected_time_multi(c, ramp()), expected_time_pointwise_min(c, ramp()), 1e-8);
  }
}

TEST(RegionGradient, MirrorSymmetry) {
  const Configuration c{{{0.3, 0.2}, {0.7, 0.2}}, kParams};
  const Density u = Density::uniform(1.0);
  const Gradient a = region_gradient(c, 0, u);
  const Gradient b = region_gradient(c, 1, u);
  EXPECT_NEAR(a.x, -b.x, 1e-14);
  EXPECT_NEAR(a.y, b.y, 1e-14);
}

TEST(RegionGradient, MatchesFiniteDifference) {
  const Density d = ramp();
  app::Sampler sampler(9);
  for (int s = 0; s < 20; ++s) {
    const Configuration c{sampler.configuration(3, 1.0, 0.05, 1.0, 0.05), kParams};
    const Partition part = dominance_partition(c.positions, kParams);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (part[i].empty()) {
        EXPECT_THROW(region_gradient(c, i, d), EmptyRegionError);
        continue;
      }
      const Vec2 fd = oracles::central_difference(
          [&](Vec2 q) {
            Configuration moved = c;
            moved.positions[i] = q;
            return expected_time_multi(moved, d);
          },
          c.positions[i], 1e-6);
      EXPECT_LE(norm(region_gradient(c, i, d) - fd) / norm(fd), 1e-5);
    }
  }
}

TEST(RegionGradient, FullRegionReducesToSingleVehicle) {
  const Density d = ramp();
  const Configuration c{{{0.4, 0.3}, {0.6, 50.0}}, kParams};
  const Gradient multi = region_gradient(c, 0, d);
  const Gradient single =
      expected_cost_gradient(c.positions[0], CostCoeffs::constrained_time(0.5), d);
  EXPECT_NEAR(multi.x, single.x, 1e-13);
  EXPECT_NEAR(multi.y, single.y, 1e-13);
}

TEST(RegionGradient, SingularOnGeneratorInsideRegion) {
  const Configuration c{{{0.4, 0.0}, {0.6, 0.5}}, kParams};
  EXPECT_THROW(region_gradient(c, 0, Density::uniform(1.0)), SingularityError);
}

TEST(LloydRound, EmptyVehicleDrops) {
  const Configuration c{{{0.3, 0.05}, {0.7, 0.05}, {0.5, 0.4}}, kParams};
  ASSERT_TRUE(dominance_partition(c.positions, kParams)[2].empty());
  const Configuration next = lloyd_round(c, Density::uniform(1.0));
  EXPECT_EQ(next.positions[2].x, 0.5);
  EXPECT_EQ(next.positions[2].y, 0.0);
}

TEST(LloydRound, EmptyVehicleHighUpDropsOneUnit) {
  const Configuration c{{{0.5, 0.1}, {0.5, 30.0}}, kParams};
  const Configuration next = lloyd_round(c, Density::uniform(1.0));
  EXPECT_EQ(next.positions[1].y, 29.0);
}

TEST(LloydRound, SaturatedDisplacementIsOne) {
  // Near the right end of a long segment with a fast target the field is
  // about (a sqrt(b), -c), well above unit norm and nearly constant over one
  // round, so the path is straight.
  const Density d = Density::uniform(10000.0);
  const GameParams g(10000.0, 0.9);
  const Configuration c{{{9990.0, 5.0}}, g};
  ASSERT_GT(norm(region_gradient(c, 0, d)), 1.0);
  const Configuration next = lloyd_round(c, d);
  EXPECT_NEAR(distance(next.positions[0], c.positions[0]), 1.0, 1e-6);
}

TEST(LloydDescend, MonotoneConfinedAndCritical) {
  app::Sampler sampler(77);
  for (int s = 0; s < 4; ++s) {
    const Density d = s % 2 == 0 ? Density::uniform(1.0) : ramp();
    const Configuration start{sampler.configuration(2 + s % 2, 1.0, 0.05, 1.5, 0.05), kParams};
    LloydOptions options;
    options.tol = 1e-7;
    const LloydTrace trace = lloyd_descend(start, d, options);
    EXPECT_TRUE(trace.converged);
    for (std::size_t k = 1; k < trace.rounds.size(); ++k) {
      EXPECT_LE(trace.rounds[k].expected_time, trace.rounds[k - 1].expected_time + 1e-10);
      for (const VehiclePos& p : trace.rounds[k].positions) {
        EXPECT_GE(p.x, 0.0);
        EXPECT_LE(p.x, 1.0);
        EXPECT_GE(p.y, 0.0);
      }
      for (std::size_t i = 0; i < start.size(); ++i) {
        EXPECT_LE(distance(trace.rounds[k].positions[i], trace.rounds[k - 1].positions[i]),
                  1.0 + 1e-9);
      }
    }
    EXPECT_TRUE(is_critical(Configuration{trace.final_positions, kParams}, d, 1e-5).critical);
  }
}

TEST(LloydDescend, RecordsRecovery) {
  const Configuration start{{{0.3, 0.05}, {0.7, 0.05}, {0.5, 0.4}}, kParams};
  const LloydTrace trace = lloyd_descend(start, Density::uniform(1.0));
  EXPECT_TRUE(trace.rounds.front().empty[2]);
  ASSERT_FALSE(trace.recoveries[2].empty());
  EXPECT_EQ(trace.recoveries[2].front(), 1u);
}

TEST(IsCritical, NonzeroGradientIsNotCritical) {
  const Configuration c{{{0.1, 0.5}, {0.9, 0.2}}, kParams};
  const CriticalityReport r = is_critical(c, Density::uniform(1.0), 1e-6);
  EXPECT_FALSE(r.critical);
  EXPECT_FALSE(r.vehicles[0].critical);
}

TEST(IsCritical, EmptyRegionIsNotCritical) {
  const Configuration c{{{0.3, 0.05}, {0.7, 0.05}, {0.5, 0.4}}, kParams};
  const CriticalityReport r = is_critical(c, Density::uniform(1.0), 1e-6);
  EXPECT_FALSE(r.critical);
  EXPECT_TRUE(r.vehicles[2].empty);
}

TEST(IsCritical, ConvergedDescentIsCritical) {
  const Configuration start{{{0.2, 0.4}, {0.9, 0.3}}, kParams};
  LloydOptions options;
  options.tol = 1e-8;
  const LloydTrace trace = lloyd_descend(start, Density::uniform(1.0), options);
  ASSERT_TRUE(trace.converged);
  EXPECT_TRUE(is_critical({trace.final_positions, kParams}, Density::uniform(1.0), 1e-6).critical);
}

TEST(InstabilityCheck, SingleVehicleIsStableCandidate) {
  const Density u = Density::uniform(1.0);
  const DescentResult r = optimize_single({0.5, 0.5}, CostCoeffs::constrained_time(0.5), u);
  const StabilityReport s = instability_check({{r.optimum}, kParams}, u);
  EXPECT_FALSE(s.unstable);
  EXPECT_EQ(s.vehicles[0].verdict, Stability::stable_candidate);
}

TEST(InstabilityCheck, RejectsNonCritical) {
  const Configuration c{{{0.1, 0.5}, {0.9, 0.2}}, kParams};
  EXPECT_THROW(instability_check(c, Density::uniform(1.0)), PreconditionError);
}

TEST(InstabilityCheck, StackedAndSideBySide) {
  const Density u = Density::uniform(1.0);
  LloydOptions options;
  options.tol = 1e-7;
  const LloydTrace stacked = lloyd_descend({{{0.5, 0.3}, {0.5, 0.7}}, kParams}, u, options);
  ASSERT_TRUE(stacked.converged);
  const StabilityReport a = instability_check({stacked.final_positions, kParams}, u);
  EXPECT_TRUE(a.unstable);

  const LloydTrace side = lloyd_descend({{{0.501, 0.3}, {0.5, 0.7}}, kParams}, u, options);
  ASSERT_TRUE(side.converged);
  const StabilityReport b = instability_check({side.final_positions, kParams}, u);
  EXPECT_FALSE(b.unstable);
}

}  // namespace
}  // namespace intercept
