#pragma once

#include "intercept/vec2.hpp"

namespace intercept {

/// Segment width W and target speed v, with the vehicle speed normalized to 1.
class GameParams {
 public:
  /// Requires W > 0 and 0 < v < 1.
  GameParams(double width, double target_speed);

  double width() const { return width_; }
  double target_speed() const { return target_speed_; }

 private:
  double width_;
  double target_speed_;
};

/// Coefficients of the cost family
///   C(X, Y, x) = a * sqrt(b (X - x)^2 + Y^2) - c * Y,   a > c >= 0, b > 0.
class CostCoeffs {
 public:
  CostCoeffs(double a, double b, double c);

  /// Time for a unit-speed vehicle to catch a target that leaves (x, 0)
  /// perpendicular to the generator at speed v, 0 <= v < 1.
  static CostCoeffs constrained_time(double target_speed);

  /// Capture height when the evader plays against the parallel-navigation
  /// pursuer, 0 < v < 1.
  static CostCoeffs vertical_height(double target_speed);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  double a_;
  double b_;
  double c_;
};

double generic_cost(VehiclePos p, double x, const CostCoeffs& k);

/// Partial derivatives of generic_cost in (X, Y). Requires Y > 0 or X != x.
Gradient generic_cost_gradient(VehiclePos p, double x, const CostCoeffs& k);

/// [sqrt((1 - v^2)(X - x)^2 + Y^2) - v Y] / (1 - v^2); evaluated through
/// generic_cost so the two agree bit for bit.
double constrained_time(VehiclePos p, double x, double target_speed);
double constrained_time(VehiclePos p, double x, const GameParams& g);

}  // namespace intercept
