#include "intercept/cost.hpp"

#include <cmath>
#include <string>

#include "intercept/errors.hpp"

namespace intercept {

GameParams::GameParams(double width, double target_speed)
    : width_(width), target_speed_(target_speed) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw DomainError("width must be positive and finite, got " + std::to_string(width));
  }
  if (!(target_speed > 0.0 && target_speed < 1.0)) {
    throw DomainError("target speed must lie in (0, 1), got " + std::to_string(target_speed));
  }
}

CostCoeffs::CostCoeffs(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(a > 0.0 && b > 0.0 && c >= 0.0 && a > c) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("cost coefficients need a > c >= 0 and b > 0");
  }
}

CostCoeffs CostCoeffs::constrained_time(double v) {
  if (!(v >= 0.0 && v < 1.0)) {
    throw DomainError("target speed must lie in [0, 1), got " + std::to_string(v));
  }
  const double b = 1.0 - v * v;
  return CostCoeffs(1.0 / b, b, v / b);
}

CostCoeffs CostCoeffs::vertical_height(double v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError("target speed must lie in (0, 1), got " + std::to_string(v));
  }
  const double b = 1.0 - v * v;
  return CostCoeffs(v / b, 1.0, v * v / b);
}

double generic_cost(VehiclePos p, double x, const CostCoeffs& k) {
  const double dx = p.x - x;
  return k.a() * std::sqrt(k.b() * dx * dx + p.y * p.y) - k.c() * p.y;
}

Gradient generic_cost_gradient(VehiclePos p, double x, const CostCoeffs& k) {
  const double dx = p.x - x;
  const double r = std::sqrt(k.b() * dx * dx + p.y * p.y);
  if (!(r > 0.0)) {
    throw SingularityError("cost gradient is undefined at the target location");
  }
  return {k.a() * k.b() * dx / r, k.a() * p.y / r - k.c()};
}

double constrained_time(VehiclePos p, double x, double target_speed) {
  return generic_cost(p, x, CostCoeffs::constrained_time(target_speed));
}

double constrained_time(VehiclePos p, double x, const GameParams& g) {
  return constrained_time(p, x, g.target_speed());
}

}  // namespace intercept
