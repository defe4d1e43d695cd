#pragma once

// Brute-force reference computations. They share only pointwise formulas
// with the library (the density value and the per-arrival costs), never
// its quadrature, gradients, partition construction or optimizers.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "intercept/cost.hpp"
#include "intercept/density.hpp"
#include "intercept/region.hpp"
#include "intercept/vec2.hpp"

namespace intercept::oracles {

/// Composite midpoint rule for Int_lo^hi f(x) density(x) dx.
double midpoint_sum(const Density& d, const std::function<double(double)>& f, double lo,
                    double hi, double step);

/// Composite Simpson rule for Int_lo^hi f(x) density(x) dx on `panels`
/// (even) panels.
double simpson(const Density& d, const std::function<double(double)>& f, double lo, double hi,
               std::size_t panels);

/// Central finite difference of a scalar function of a planar point.
Vec2 central_difference(const std::function<double(Vec2)>& f, Vec2 p, double h);

/// Expected generic cost by Simpson's rule on [0, W].
double expected_cost_simpson(VehiclePos p, const CostCoeffs& k, const Density& d,
                             std::size_t panels = 20000);

struct Box {
  double x_lo;
  double x_hi;
  double y_lo;
  double y_hi;
};

/// Grid search that ends on a grid of spacing `final_step`. Each stage scans
/// a window around the previous stage's best node with a 10x finer grid,
/// relying on the function being unimodal.
Vec2 grid_argmin(const std::function<double(Vec2)>& f, Box box, double final_step);

/// Exhaustive 1-D grid search on [lo, hi] at the given spacing.
double grid_argmin_1d(const std::function<double(double)>& f, double lo, double hi, double step);

/// Minimizer of Int |X - x| density(x) dx over a grid of spacing `step`.
double median_by_scan(const Density& d, double step);

/// Pairwise dominance region reconstructed from the sign of
/// T(p_i, x) - T(p_j, x) on a grid of spacing `step`; each boundary is put
/// at the midpoint of the step where the sign flips.
Region dominance_by_scan(VehiclePos pi, VehiclePos pj, const GameParams& g, double step);

/// Index of the vehicle with the smallest constrained time to arrival x.
std::size_t argmin_vehicle(std::span<const VehiclePos> positions, double x, double v);

}  // namespace intercept::oracles
