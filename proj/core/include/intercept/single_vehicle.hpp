#pragma once

#include <cstddef>
#include <vector>

#include "intercept/cost.hpp"
#include "intercept/density.hpp"
#include "intercept/region.hpp"
#include "intercept/vec2.hpp"

namespace intercept {

/// Integral of the cost against the density over the whole generator.
double expected_cost(VehiclePos p, const CostCoeffs& k, const Density& d);

/// Same integral restricted to a region.
double expected_cost(VehiclePos p, const CostCoeffs& k, const Density& d, const Region& region);

/// Partial derivatives of expected_cost,
///   dX = a b  Int (X - x) phi / sqrt(b (X - x)^2 + Y^2),
///   dY = a Y  Int phi / sqrt(b (X - x)^2 + Y^2) - c.
/// Throws SingularityError for Y <= 0.
Gradient expected_cost_gradient(VehiclePos p, const CostCoeffs& k, const Density& d);

/// Gradient of the region-restricted expected cost. The -c term is weighted
/// by the mass of the region. At Y = 0 this is the one-sided limit Y -> 0+,
/// (a sqrt(b) Int sign(X - x) phi, -c mass).
Gradient cost_gradient_on_region(VehiclePos p, const CostCoeffs& k, const Density& d,
                                 const Region& region);

struct DescentOptions {
  double tol = 1e-8;
  std::size_t max_iter = 10000;
  double armijo = 1e-4;
  double shrink = 0.5;
  double initial_step = 1.0;
};

struct DescentStep {
  VehiclePos position;
  double cost = 0.0;
};

struct DescentResult {
  VehiclePos optimum;
  double cost = 0.0;
  double grad_norm = 0.0;
  std::size_t iterations = 0;
  /// False when max_iter ran out, or the line search stalled, before the
  /// gradient norm dropped below tol.
  bool converged = false;
  std::vector<DescentStep> trace;
};

/// Gradient descent on expected_cost with Armijo backtracking. Steps that
/// would reach Y <= 0, or leave [0, W] from inside it, are shortened.
DescentResult optimize_single(VehiclePos start, const CostCoeffs& k, const Density& d,
                              const DescentOptions& options = {});

/// optimize_single for the cost restricted to a non-empty region.
DescentResult optimize_on_region(VehiclePos start, const CostCoeffs& k, const Density& d,
                                 const Region& region, const DescentOptions& options = {});

/// Limit placement as the target speed approaches the vehicle speed:
/// (centroid, standard deviation) of the density.
VehiclePos equal_speed_optimum(const Density& d);

}  // namespace intercept
