#include "intercept/single_vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "intercept/errors.hpp"

namespace intercept {

namespace {

// The integrands have a kink (Y = 0) or a sharp peak (small Y) at x = X.
std::span<const double> kink_at(const double& x, const Density& d) {
  if (x > 0.0 && x < d.width()) {
    return {&x, 1};
  }
  return {};
}

Gradient region_gradient_impl(VehiclePos p, const CostCoeffs& k, const Density& d,
                              const Region& region) {
  const double a = k.a();
  const double b = k.b();
  if (p.y == 0.0) {
    const double slope = a * std::sqrt(b);
    double signed_mass = 0.0;
    for (const Interval& iv : region.intervals()) {
      const double split = std::clamp(p.x, iv.lo, iv.hi);
      signed_mass += (d.cdf(split) - d.cdf(iv.lo)) - (d.cdf(iv.hi) - d.cdf(split));
    }
    return {slope * signed_mass, -k.c() * d.mass(region)};
  }
  const double y2 = p.y * p.y;
  const Gradient integral = d.integrate(
      region,
      [&](double x) {
        const double dx = p.x - x;
        const double inv_r = 1.0 / std::sqrt(b * dx * dx + y2);
        return Gradient{dx * inv_r, inv_r};
      },
      kink_at(p.x, d));
  return {a * b * integral.x, a * p.y * integral.y - k.c() * d.mass(region)};
}

DescentResult descend(VehiclePos start, const CostCoeffs& k, const Density& d,
                      const Region& region, const DescentOptions& options) {
  if (!(start.y > 0.0) || !std::isfinite(start.x) || !std::isfinite(start.y)) {
    throw DomainError("descent start needs finite X and Y > 0");
  }
  if (!(options.tol > 0.0)) {
    throw DomainError("descent tolerance must be positive");
  }
  if (region.empty()) {
    throw EmptyRegionError(0);
  }
  const double width = d.width();
  auto cost = [&](VehiclePos p) { return expected_cost(p, k, d, region); };

  DescentResult result;
  VehiclePos p = start;
  double f = cost(p);
  Gradient g = region_gradient_impl(p, k, d, region);
  result.trace.push_back({p, f});

  std::size_t iter = 0;
  for (; iter < options.max_iter; ++iter) {
    const double gnorm2 = dot(g, g);
    if (std::sqrt(gnorm2) < options.tol) {
      break;
    }
    const bool inside = p.x >= 0.0 && p.x <= width;
    double step = options.initial_step;
    bool accepted = false;
    VehiclePos candidate;
    double f_candidate = 0.0;
    while (step > 1e-20) {
      candidate = p - step * g;
      const bool feasible =
          candidate.y > 0.0 && (!inside || (candidate.x >= 0.0 && candidate.x <= width));
      if (feasible) {
        f_candidate = cost(candidate);
        if (f_candidate <= f - options.armijo * step * gnorm2) {
          accepted = true;
          break;
        }
      }
      step *= options.shrink;
    }
    if (!accepted) {
      break;
    }
    p = candidate;
    f = f_candidate;
    g = region_gradient_impl(p, k, d, region);
    result.trace.push_back({p, f});
  }

  result.optimum = p;
  result.cost = f;
  result.grad_norm = norm(g);
  result.iterations = iter;
  result.converged = result.grad_norm < options.tol;
  return result;
}

}  // namespace

double expected_cost(VehiclePos p, const CostCoeffs& k, const Density& d) {
  return expected_cost(p, k, d, Region::full(d.width()));
}

double expected_cost(VehiclePos p, const CostCoeffs& k, const Density& d, const Region& region) {
  return d.integrate(region, [&](double x) { return generic_cost(p, x, k); }, kink_at(p.x, d));
}

Gradient expected_cost_gradient(VehiclePos p, const CostCoeffs& k, const Density& d) {
  if (!(p.y > 0.0)) {
    throw SingularityError("expected cost gradient requires Y > 0, got Y = " +
                           std::to_string(p.y));
  }
  return region_gradient_impl(p, k, d, Region::full(d.width()));
}

Gradient cost_gradient_on_region(VehiclePos p, const CostCoeffs& k, const Density& d,
                                 const Region& region) {
  if (p.y < 0.0) {
    throw DomainError("vehicle below the generator, Y = " + std::to_string(p.y));
  }
  return region_gradient_impl(p, k, d, region);
}

DescentResult optimize_single(VehiclePos start, const CostCoeffs& k, const Density& d,
                              const DescentOptions& options) {
  return descend(start, k, d, Region::full(d.width()), options);
}

DescentResult optimize_on_region(VehiclePos start, const CostCoeffs& k, const Density& d,
                                 const Region& region, const DescentOptions& options) {
  return descend(start, k, d, region, options);
}

VehiclePos equal_speed_optimum(const Density& d) {
  const Density::Moments m = d.centroid_and_spread();
  return {m.centroid, m.spread};
}

}  // namespace intercept
