#include "intercept/app/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "intercept/app/runner.hpp"
#include "intercept/app/sampling.hpp"
#include "intercept/errors.hpp"
#include "intercept/lloyd.hpp"
#include "intercept/oracles.hpp"
#include "intercept/partition.hpp"
#include "intercept/pursuit.hpp"
#include "intercept/single_vehicle.hpp"

namespace intercept::app {
namespace {

namespace fs = std::filesystem;

Density ramp_density(double width) {
  return Density::piecewise_linear({{0.0, 0.0}, {0.25 * width, 2.0 / width}, {width, 0.0}});
}

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string module)
      : report_(report), module_(std::move(module)) {}

  void check(std::string name, double measured, double tolerance, std::string detail = {}) {
    Check c;
    c.module = module_;
    c.name = std::move(name);
    c.measured = measured;
    c.tolerance = tolerance;
    c.passed = measured <= tolerance;
    c.detail = std::move(detail);
    report_.checks.push_back(std::move(c));
  }

  void note(std::string name, double measured, std::string detail) {
    Check c;
    c.module = module_;
    c.name = std::move(name);
    c.measured = measured;
    c.tolerance = std::numeric_limits<double>::quiet_NaN();
    c.passed = true;
    c.informational = true;
    c.detail = std::move(detail);
    report_.checks.push_back(std::move(c));
  }

 private:
  VerifyReport& report_;
  std::string module_;
};

double relative_error(Vec2 value, Vec2 reference) {
  return norm(value - reference) / std::max(norm(reference), 1e-300);
}

// ---------------------------------------------------------------- density

void verify_density(VerifyReport& report, std::uint64_t seed) {
  Recorder r(report, "density");
  Sampler sampler(seed + 11);
  std::vector<Density> densities{Density::uniform(1.0), Density::uniform(3.5), ramp_density(1.0),
                                 ramp_density(2.0)};
  for (std::size_t i = 0; i < 10; ++i) {
    const double width = sampler.uniform(0.5, 4.0);
    densities.push_back(sampler.density(width, 1 + i % 8));
  }

  double norm_err = 0.0;
  double lipschitz_excess = 0.0;
  for (const Density& d : densities) {
    norm_err = std::max(norm_err, std::abs(d.integrate([](double) { return 1.0; }) - 1.0));
    const double h = 1e-3 * d.width();
    for (int s = 0; s < 1000; ++s) {
      const double x = sampler.uniform(0.0, d.width() - h);
      const double jump = std::abs(d.evaluate(x) - d.evaluate(x + h));
      lipschitz_excess = std::max(lipschitz_excess, jump - d.lipschitz() * h);
    }
  }
  r.check("normalization", norm_err, 1e-9, "|Int phi - 1| over 14 densities");
  r.check("lipschitz_continuity", lipschitz_excess, 1e-12,
          "max of |phi(x) - phi(x + h)| - L h, 1000 samples per density");

  double median_gap = 0.0;
  double centroid_gap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Density& d = densities[i == 3 ? 6 : i];
    const double w = d.width();
    median_gap = std::max(median_gap, std::abs(oracles::median_by_scan(d, 1e-4 * w) - d.median()) / w);
    const double centroid = d.centroid_and_spread().centroid;
    const double best = oracles::grid_argmin_1d(
        [&](double X) {
          return oracles::midpoint_sum(d, [X](double x) { return (X - x) * (X - x); }, 0.0, w,
                                       1e-3 * w);
        },
        0.0, w, 1e-4 * w);
    centroid_gap = std::max(centroid_gap, std::abs(best - centroid) / w);
  }
  r.check("median_vs_absolute_deviation_scan", median_gap, 2e-4,
          "relative to W; scan of Int |X - x| phi on a 1e-4 W grid");
  r.check("centroid_vs_squared_deviation_scan", centroid_gap, 1e-4,
          "relative to W; scan of Int (X - x)^2 phi on a 1e-4 W grid");
}

// ---------------------------------------------------------- single vehicle

void verify_single_vehicle(VerifyReport& report, std::uint64_t seed) {
  Recorder r(report, "single_vehicle");
  Sampler sampler(seed + 23);
  const Density uniform = Density::uniform(1.0);
  const Density ramp = ramp_density(1.0);
  const CostCoeffs time_k = CostCoeffs::constrained_time(0.5);

  double convexity = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < 200; ++s) {
    const Density& d = s % 2 == 0 ? uniform : ramp;
    const VehiclePos a{sampler.uniform(0.0, 1.0), sampler.uniform(1e-3, 2.0)};
    const VehiclePos b{sampler.uniform(0.0, 1.0), sampler.uniform(1e-3, 2.0)};
    const double mid = expected_cost((a + b) * 0.5, time_k, d);
    const double avg = 0.5 * (expected_cost(a, time_k, d) + expected_cost(b, time_k, d));
    convexity = std::max(convexity, mid - avg);
  }
  r.check("midpoint_convexity", std::max(convexity, 0.0), 1e-9,
          "max of C(mid) - mean(C(a), C(b)) over 200 pairs");

  double grad_err = 0.0;
  for (int s = 0; s < 100; ++s) {
    const Density& d = s % 2 == 0 ? uniform : ramp;
    const double v = sampler.uniform(0.05, 0.95);
    const CostCoeffs k = s % 3 == 0 ? CostCoeffs::vertical_height(v)
                                    : CostCoeffs::constrained_time(v);
    const VehiclePos p{sampler.uniform(0.0, 1.0), sampler.uniform(0.05, 2.0)};
    const Vec2 fd = oracles::central_difference(
        [&](Vec2 q) { return expected_cost(q, k, d); }, p, 1e-6);
    grad_err = std::max(grad_err, relative_error(expected_cost_gradient(p, k, d), fd));
  }
  r.check("gradient_vs_finite_difference", grad_err, 1e-6,
          "relative error, 100 interior points, h = 1e-6");

  double increase = 0.0;
  double escape = 0.0;
  for (int s = 0; s < 10; ++s) {
    const Density& d = s % 2 == 0 ? uniform : ramp;
    const VehiclePos start{sampler.uniform(0.0, 1.0), sampler.uniform(0.01, 2.0)};
    const DescentResult res = optimize_single(start, time_k, d);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
      increase = std::max(increase, res.trace[i].cost - res.trace[i - 1].cost);
    }
    for (const DescentStep& step : res.trace) {
      const Vec2 q = step.position;
      const double out = std::max({0.0, -q.x, q.x - (1.0 + 1e-9), q.y <= 0.0 ? 1.0 : 0.0});
      escape = std::max(escape, out);
    }
  }
  r.check("descent_monotone", increase, 1e-12, "largest cost increase along 10 traces");
  r.check("descent_confined", escape, 0.0, "distance outside [0, W + 1e-9] x (0, inf)");

  double mismatch = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const double v = sampler.uniform(0.0, 0.99);
    const VehiclePos p{sampler.uniform(0.0, 1.0), sampler.uniform(0.0, 2.0)};
    const double x = sampler.uniform(0.0, 1.0);
    const double diff = constrained_time(p, x, v) -
                        generic_cost(p, x, CostCoeffs::constrained_time(v));
    mismatch = std::max(mismatch, std::abs(diff));
  }
  r.check("time_is_generic_instance", mismatch, 0.0, "bitwise agreement on 1000 samples");

  const CostCoeffs height_k = CostCoeffs::vertical_height(0.5);
  const DescentResult h1 = optimize_single({0.1, 0.8}, height_k, ramp);
  const DescentResult h2 = optimize_single({0.9, 0.2}, height_k, ramp);
  r.check("height_optimum_unique", distance(h1.optimum, h2.optimum), 1e-4,
          "two starts, ramp density, v = 0.5");

  const DescentResult o1 = optimize_single({0.1, 0.8}, time_k, uniform);
  const DescentResult o2 = optimize_single({0.9, 0.2}, time_k, uniform);
  r.check("time_optimum_symmetric", std::abs(o1.optimum.x - 0.5), 1e-4, "uniform, v = 0.5");
  r.check("time_optimum_unique", distance(o1.optimum, o2.optimum), 1e-4, "two starts");
  const Vec2 grid = oracles::grid_argmin(
      [&](Vec2 q) { return oracles::expected_cost_simpson(q, time_k, uniform, 2000); },
      {0.0, 1.0, 1e-4, 2.0}, 1e-4);
  r.check("time_optimum_vs_grid", std::abs(o1.optimum.y - grid.y), 2e-4,
          "Y against a 1e-4 grid search");

  const DescentResult fast = optimize_single({0.1, 0.8}, CostCoeffs::constrained_time(0.99),
                                             uniform);
  r.check("equal_speed_limit", distance(fast.optimum, equal_speed_optimum(uniform)), 0.02,
          "v = 0.99 optimum against (centroid, spread)");
}

// ----------------------------------------------------------- pursuit games

struct Geometry {
  VehiclePos p;
  double x;
  double v;
};

std::vector<Geometry> geometries(Sampler& sampler, std::size_t n) {
  std::vector<Geometry> out;
  while (out.size() < n) {
    Geometry g{{sampler.uniform(0.0, 1.0), sampler.uniform(0.05, 1.0)},
               sampler.uniform(0.0, 1.0), sampler.uniform(0.1, 0.8)};
    out.push_back(g);
  }
  return out;
}

void verify_pursuit(VerifyReport& report, std::uint64_t seed) {
  Recorder r(report, "pursuit_games");
  Sampler sampler(seed + 37);
  const auto cases = geometries(sampler, 25);
  constexpr double dt = 1e-4;

  double identity = 0.0;
  double height_gap = 0.0;
  double generic_gap = 0.0;
  for (const Geometry& g : cases) {
    const ApolloniusCircle c = apollonius(g.p, g.x, g.v);
    const Vec2 q{g.x, 0.0};
    for (int s = 0; s < 64; ++s) {
      const double angle = 2.0 * std::numbers::pi * s / 64.0;
      const Vec2 w{c.center.x + c.radius * std::cos(angle), c.center.y + c.radius * std::sin(angle)};
      identity = std::max(identity, std::abs(distance(q, w) - g.v * distance(g.p, w)));
    }
    height_gap = std::max(height_gap, std::abs(vertical_height(g.p, g.x, g.v) -
                                               evader_target_height(g.p, g.x, g.v).y));
    generic_gap = std::max(generic_gap,
                           std::abs(vertical_height(g.p, g.x, g.v) -
                                    generic_cost(g.p, g.x, CostCoeffs::vertical_height(g.v))));
  }
  r.check("apollonius_identity", identity, 1e-9, "|q - w| - v |p - w| at 64 points, 25 circles");
  r.check("height_is_circle_top", height_gap, 1e-12, "vertical_height vs O_y + R");
  r.check("height_is_generic_instance", generic_gap, 0.0, "bitwise");

  double sim_height = 0.0;
  double sim_time = 0.0;
  double unsquared_gap = 0.0;
  std::size_t unsquared_undefined = 0;
  double shrink = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Geometry& g = cases[i];
    const PursuitTrace h = simulate_pursuit(g.p, g.x, g.v, EvaderStrategy::height, dt);
    const PursuitTrace w = simulate_pursuit(g.p, g.x, g.v, EvaderStrategy::wall, dt);
    sim_height = std::max(sim_height, h.captured ? std::abs(h.capture_point.y -
                                                            vertical_height(g.p, g.x, g.v))
                                                 : std::numeric_limits<double>::infinity());
    const double ti = intercept_time(g.p, g.x, g.v);
    sim_time = std::max(sim_time, w.captured ? std::abs(w.capture_time - ti)
                                             : std::numeric_limits<double>::infinity());
    if (const auto unsquared = intercept_time_unsquared_form(g.p, g.x, g.v)) {
      unsquared_gap = std::max(unsquared_gap, std::abs(*unsquared - w.capture_time));
    } else {
      ++unsquared_undefined;
    }
    if (i < 5) {
      const ApolloniusCircle initial = apollonius(g.p, g.x, g.v);
      for (const PursuitTrace* t : {&h, &w}) {
        const std::size_t steps = t->pursuer.size() - 1;
        for (std::size_t s = 1; s <= 10; ++s) {
          const std::size_t at = steps * s / 11;
          const ApolloniusCircle now = apollonius(t->pursuer[at], t->evader[at], g.v);
          const double excess = distance(initial.center, now.center) + now.radius - initial.radius;
          shrink = std::max(shrink, excess);
        }
      }
    }
  }
  r.check("simulated_height", sim_height, 5 * dt, "25 geometries, dt = 1e-4");
  r.check("simulated_intercept_time", sim_time, 5 * dt, "25 geometries, dt = 1e-4");
  r.note("unsquared_form_vs_simulation", unsquared_gap,
         "largest |unsquared closed form - simulated capture time| where defined; undefined in " +
             std::to_string(unsquared_undefined) + " of 25 geometries");
  r.check("shrinking_circle", shrink, 1e-6,
          "disc containment excess at 10 times on 10 simulations");

  double median_gap = 0.0;
  for (const Density& d : {Density::uniform(1.0), ramp_density(1.0)}) {
    const double v = 0.5;
    const double best = oracles::grid_argmin_1d(
        [&](double X) {
          return oracles::midpoint_sum(
              d, [&](double x) { return intercept_time({X, 0.0}, x, v); }, 0.0, 1.0, 1e-4);
        },
        0.0, 1.0, 1e-3);
    median_gap = std::max(median_gap, std::abs(best - d.median()));
  }
  r.check("median_minimizes_intercept_time", median_gap, 2e-3,
          "1e-3 scan of on-axis expected intercept time, uniform and ramp densities");

  double classify_mismatch = 0.0;
  for (int s = 0; s < 200; ++s) {
    const double v = sampler.uniform(0.1, 0.9);
    const double x = sampler.uniform(0.0, 1.0);
    const VehiclePos p1{sampler.uniform(0.0, 1.0), sampler.uniform(0.01, 1.0)};
    const VehiclePos p2{sampler.uniform(0.0, 1.0), sampler.uniform(0.01, 1.0)};
    const ApolloniusCircle c1 = apollonius(p1, x, v);
    const ApolloniusCircle c2 = apollonius(p2, x, v);
    const double gap = distance(c1.center, c2.center);
    PursuerCell expected = PursuerCell::both;
    if (gap <= c2.radius - c1.radius) {
      expected = PursuerCell::first;
    } else if (gap <= c1.radius - c2.radius) {
      expected = PursuerCell::second;
    }
    classify_mismatch += classify_two_pursuer(x, p1, p2, v) == expected ? 0.0 : 1.0;
  }
  r.check("classification_vs_disc_test", classify_mismatch, 0.0, "mismatches in 200 configs");
}

// --------------------------------------------------------------- partition

void verify_partition(VerifyReport& report, std::uint64_t seed) {
  Recorder r(report, "partition");
  Sampler sampler(seed + 41);
  double cover = 0.0;
  double overlap = 0.0;
  double optimality = 0.0;
  for (int s = 0; s < 100; ++s) {
    const std::size_t m = 2 + static_cast<std::size_t>(s % 4);
    const double width = sampler.uniform(0.5, 3.0);
    const double v = sampler.uniform(0.1, 0.9);
    const GameParams g(width, v);
    const auto ps = sampler.configuration(m, width, 0.0, width, 1e-3 * width);
    const Partition part = dominance_partition(ps, g);
    cover = std::max(cover, std::abs(part.covered_length() - width));
    overlap = std::max(overlap, part.max_overlap());
    for (int k = 0; k < 10000; ++k) {
      const double x = sampler.uniform(0.0, width);
      const std::size_t best = oracles::argmin_vehicle(ps, x, v);
      const double excess = constrained_time(ps[part.owner_of(x)], x, v) -
                            constrained_time(ps[best], x, v);
      optimality = std::max(optimality, excess);
    }
  }
  r.check("coverage", cover, 1e-9, "|union length - W|, 100 configs, m in 2..5");
  r.check("overlap", overlap, 1e-9, "largest pairwise region overlap");
  r.check("pointwise_optimality", optimality, 1e-9, "owner time - min time, 1e4 points each");

  double soundness = 0.0;
  double scan_gap = 0.0;
  double complement_gap = 0.0;
  for (int s = 0; s < 100; ++s) {
    const double v = sampler.uniform(0.1, 0.9);
    const GameParams g(1.0, v);
    const auto ps = sampler.configuration(2, 1.0, 0.0, 1.0, 1e-3);
    const Region u = pairwise_dominance(ps[0], ps[1], g);
    for (const Interval& iv : u.intervals()) {
      for (int k = 0; k <= 1000 / static_cast<int>(u.components()); ++k) {
        const double x = iv.lo + iv.length() * sampler.uniform(0.0, 1.0);
        soundness = std::max(soundness, constrained_time(ps[0], x, v) -
                                            constrained_time(ps[1], x, v));
      }
    }
    const Region swapped = pairwise_dominance(ps[1], ps[0], g);
    const double h = region_hausdorff(swapped, u.complement(1.0));
    complement_gap = std::max(complement_gap, h);
    if (s < 20) {
      scan_gap = std::max(scan_gap, region_hausdorff(u, oracles::dominance_by_scan(ps[0], ps[1], g, 1e-5)));
    }
  }
  r.check("pairwise_soundness", soundness, 1e-9, "T_i - T_j inside U_ij, 100 pairs");
  r.check("pairwise_vs_scan", scan_gap, 2e-5, "Hausdorff distance to a 1e-5 scan, 20 pairs");
  r.check("pairwise_complement", complement_gap, 1e-9, "U_ji against closure of complement of U_ij");

  std::size_t tested = 0;
  double non_monotone = 0.0;
  for (int attempt = 0; attempt < 200 && tested < 10; ++attempt) {
    const GameParams g(1.0, 0.5);
    const auto ps = sampler.configuration(3, 1.0, 0.05, 0.8, 0.05);
    const Partition base = dominance_partition(ps, g);
    bool usable = true;
    for (const Region& reg : base.regions()) {
      usable = usable && reg.length() > 0.05;
    }
    if (!usable) {
      continue;
    }
    ++tested;
    const double angle = sampler.uniform(0.0, 2.0 * std::numbers::pi);
    double previous = std::numeric_limits<double>::infinity();
    for (double delta : {1e-2, 1e-3, 1e-4}) {
      auto moved = ps;
      moved[0] = moved[0] + Vec2{std::cos(angle), std::sin(angle)} * delta;
      const Partition next = dominance_partition(moved, g);
      double worst = 0.0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        worst = std::max(worst, region_hausdorff(base[i], next[i]));
      }
      if (!(worst < previous)) {
        non_monotone += 1.0;
      }
      previous = worst;
    }
  }
  r.check("continuity", non_monotone, 0.0,
          "non-decreasing Hausdorff steps as delta goes 1e-2, 1e-3, 1e-4 (" +
              std::to_string(tested) + " configs)");

  double not_empty = 0.0;
  for (int s = 0; s < 20; ++s) {
    const GameParams g(1.0, sampler.uniform(0.1, 0.9));
    auto ps = sampler.configuration(3, 1.0, 0.0, 0.5, 1e-3);
    ps.push_back({sampler.uniform(0.0, 1.0), 0.5 + 10.0});
    const Partition part = dominance_partition(ps, g);
    not_empty += part[3].empty() ? 0.0 : 1.0;
  }
  r.check("far_vehicle_empty", not_empty, 0.0, "non-empty regions for a vehicle 10 W above");
}

// ------------------------------------------------------------ lloyd solver

void verify_lloyd(VerifyReport& report, std::uint64_t seed) {
  Recorder r(report, "lloyd_solver");
  Sampler sampler(seed + 53);
  const Density uniform = Density::uniform(1.0);
  const Density ramp = ramp_density(1.0);

  double eq_gap = 0.0;
  double grad_err = 0.0;
  for (int s = 0; s < 50; ++s) {
    const Density& d = s % 2 == 0 ? uniform : ramp;
    const GameParams g(1.0, sampler.uniform(0.1, 0.9));
    const Configuration c{sampler.configuration(2 + s % 3, 1.0, 0.02, 1.0, 0.02), g};
    eq_gap = std::max(eq_gap, std::abs(expected_time_multi(c, d) -
                                       expected_time_pointwise_min(c, d)));
    const Partition part = dominance_partition(c.positions, g);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (part[i].empty()) {
        continue;
      }
      const Vec2 fd = oracles::central_difference(
          [&](Vec2 q) {
            Configuration moved = c;
            moved.positions[i] = q;
            return expected_time_multi(moved, d);
          },
          c.positions[i], 1e-6);
      grad_err = std::max(grad_err, relative_error(region_gradient(c, i, d), fd));
    }
  }
  r.check("partition_vs_pointwise_min", eq_gap, 1e-8, "50 configurations");
  r.check("region_gradient_vs_finite_difference", grad_err, 1e-5,
          "relative error, 50 configurations, h = 1e-6");

  {
    const GameParams g(1.0, 0.5);
    const Configuration c{{{0.4, 0.3}, {0.6, 50.0}}, g};
    const Gradient multi = region_gradient(c, 0, ramp);
    const Gradient single = expected_cost_gradient(c.positions[0], CostCoeffs::constrained_time(0.5), ramp);
    r.check("full_region_reduces_to_single", norm(multi - single), 1e-12,
            "owner of [0, W] against the single-vehicle gradient");
  }

  double increase = 0.0;
  double escape = 0.0;
  double displacement = 0.0;
  double not_converged = 0.0;
  double not_critical = 0.0;
  double slow_drop = 0.0;
  for (int s = 0; s < 5; ++s) {
    const Density& d = s % 2 == 0 ? uniform : ramp;
    const GameParams g(1.0, 0.5);
    const Configuration start{sampler.configuration(2 + s % 2, 1.0, 0.05, 1.5, 0.05), g};
    LloydOptions options;
    options.tol = 1e-7;
    const LloydTrace trace = lloyd_descend(start, d, options);
    for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
      const LloydRecord& rec = trace.rounds[k];
      const auto& next = k + 1 < trace.rounds.size() ? trace.rounds[k + 1].positions
                                                     : trace.final_positions;
      if (k > 0) {
        increase = std::max(increase, rec.expected_time - trace.rounds[k - 1].expected_time);
      }
      for (std::size_t i = 0; i < rec.positions.size(); ++i) {
        const Vec2 q = rec.positions[i];
        escape = std::max({escape, -q.x, q.x - 1.0, -q.y});
        displacement = std::max(displacement, distance(q, next[i]));
        if (rec.empty[i]) {
          // Empty branch: the drop must be exactly min(1, Y).
          slow_drop = std::max(slow_drop, std::abs((q.y - next[i].y) - std::min(1.0, q.y)));
        }
      }
    }
    not_converged += trace.converged ? 0.0 : 1.0;
    const Configuration end{trace.final_positions, g};
    not_critical += is_critical(end, d, 1e-5).critical ? 0.0 : 1.0;
  }
  r.check("expected_time_monotone", std::max(increase, 0.0), 1e-10, "5 descents");
  r.check("positions_confined", std::max(escape, 0.0), 0.0, "distance outside [0, W] x [0, inf)");
  r.check("saturation_bound", displacement, 1.0 + 1e-9, "largest per-round displacement");
  r.check("empty_branch_drop", slow_drop, 1e-15, "|drop - min(1, Y)| for empty-region vehicles");
  r.check("descents_converged", not_converged, 0.0, "failures within 500 rounds");
  r.check("converged_is_critical", not_critical, 0.0, "is_critical at tol 1e-5");
}

// --------------------------------------------------------------------- cli

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void verify_cli(VerifyReport& report, std::uint64_t seed) {
  Recorder r(report, "cli");
  const fs::path root = fs::temp_directory_path() /
                        ("intercept-verify-" + std::to_string(seed) + "-" +
                         std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  const std::vector<std::string> scenarios{
      R"({"mode": "multi-lloyd", "width": 1, "target_speed": 0.5,
          "density": {"type": "piecewise_linear", "points": [[0, 0], [0.25, 2], [1, 0]]},
          "random_positions": {"count": 3, "y_max": 1.0}, "solver": {"rounds": 40},
          "svg_every": 10})",
      R"({"mode": "simulate-pursuit", "width": 1, "target_speed": 0.5,
          "density": {"type": "uniform"}, "positions": [[0.2, 0.7]],
          "pursuit": {"x0": 0.6, "strategy": "wall"}})",
      R"({"mode": "single-height", "width": 1, "target_speed": 0.4,
          "density": {"type": "uniform"}, "positions": [[0.3, 0.6]]})",
  };
  double differing = 0.0;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 2; ++rep) {
      RunOverrides o;
      o.seed = seed;
      dirs.push_back(root / ("s" + std::to_string(i) + "r" + std::to_string(rep)));
      o.output = dirs.back().string();
      run_scenario_text(scenarios[i], o);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      files.push_back(entry.path().filename());
    }
    std::size_t second_count = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dirs[1])) {
      ++second_count;
    }
    if (files.empty() || second_count != files.size()) {
      differing += 1.0;
    }
    for (const fs::path& name : files) {
      differing += read_all(dirs[0] / name) == read_all(dirs[1] / name) ? 0.0 : 1.0;
    }
  }
  r.check("deterministic_artifacts", differing, 0.0, "differing files across repeated runs");

  struct Omission {
    std::string field;
    std::string document;
  };
  const std::vector<Omission> omissions{
      {"mode", R"({"width": 1, "target_speed": 0.5, "density": {"type": "uniform"}, "positions": [[0.5, 0.5]]})"},
      {"width", R"({"mode": "single-time", "target_speed": 0.5, "density": {"type": "uniform"}, "positions": [[0.5, 0.5]]})"},
      {"target_speed", R"({"mode": "single-time", "width": 1, "density": {"type": "uniform"}, "positions": [[0.5, 0.5]]})"},
      {"density", R"({"mode": "single-time", "width": 1, "target_speed": 0.5, "positions": [[0.5, 0.5]]})"},
      {"density.type", R"({"mode": "single-time", "width": 1, "target_speed": 0.5, "density": {}, "positions": [[0.5, 0.5]]})"},
      {"density.points", R"({"mode": "single-time", "width": 1, "target_speed": 0.5, "density": {"type": "piecewise_linear"}, "positions": [[0.5, 0.5]]})"},
      {"positions", R"({"mode": "single-time", "width": 1, "target_speed": 0.5, "density": {"type": "uniform"}})"},
      {"pursuit", R"({"mode": "simulate-pursuit", "width": 1, "target_speed": 0.5, "density": {"type": "uniform"}, "positions": [[0.5, 0.5]]})"},
      {"pursuit.x0", R"({"mode": "simulate-pursuit", "width": 1, "target_speed": 0.5, "density": {"type": "uniform"}, "positions": [[0.5, 0.5]], "pursuit": {"strategy": "wall"}})"},
      {"pursuit.strategy", R"({"mode": "simulate-pursuit", "width": 1, "target_speed": 0.5, "density": {"type": "uniform"}, "positions": [[0.5, 0.5]], "pursuit": {"x0": 0.1}})"},
      {"random_positions.count", R"({"mode": "multi-lloyd", "width": 1, "target_speed": 0.5, "density": {"type": "uniform"}, "random_positions": {"y_max": 1}})"},
  };
  double wrong = 0.0;
  for (const Omission& o : omissions) {
    RunOverrides overrides;
    overrides.output = (root / "schema").string();
    const RunOutcome out = run_scenario_text(o.document, overrides);
    const bool ok = out.exit_code == kExitSchema &&
                    out.message.find(o.field + ":") != std::string::npos;
    wrong += ok ? 0.0 : 1.0;
  }
  r.check("schema_rejection", wrong, 0.0,
          "omissions not reported as exit 2 naming the field (" +
              std::to_string(omissions.size()) + " cases)");
  std::error_code ec;
  fs::remove_all(root, ec);
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json item;
    item["module"] = c.module;
    item["name"] = c.name;
    item["measured"] = c.measured;
    item["tolerance"] = c.informational ? nlohmann::json(nullptr) : nlohmann::json(c.tolerance);
    item["passed"] = c.passed;
    if (c.informational) {
      item["informational"] = true;
    }
    item["detail"] = c.detail;
    j["checks"].push_back(std::move(item));
  }
  return j.dump(2);
}

std::optional<VerifyReport> verify(std::string_view selector, std::uint64_t seed) {
  using Runner = void (*)(VerifyReport&, std::uint64_t);
  const std::array<std::pair<std::string_view, Runner>, 6> runners{{
      {"density", verify_density},
      {"single_vehicle", verify_single_vehicle},
      {"pursuit_games", verify_pursuit},
      {"partition", verify_partition},
      {"lloyd_solver", verify_lloyd},
      {"cli", verify_cli},
  }};
  VerifyReport report;
  report.seed = seed;
  bool matched = false;
  for (const auto& [name, run] : runners) {
    if (selector == "all" || selector == name) {
      run(report, seed);
      matched = true;
    }
  }
  if (!matched) {
    return std::nullopt;
  }
  return report;
}

}  // namespace intercept::app
