#pragma once

#include <optional>
#include <vector>

#include "intercept/vec2.hpp"

namespace intercept {

/// Locus of points w with |evader - w| = v |pursuer - w|: the boundary of
/// the set the evader reaches no later than the pursuer.
struct ApolloniusCircle {
  Vec2 center;
  double radius = 0.0;

  /// Disc containment, |center - other.center| + other.radius <= radius + tol.
  bool contains(const ApolloniusCircle& other, double tol = 0.0) const;
};

/// Circle for arbitrary planar pursuer and evader positions, 0 < v < 1.
ApolloniusCircle apollonius(Vec2 pursuer, Vec2 evader, double v);

/// Circle for a pursuer at p and an evader at the generator point (x, 0):
///   O = ((x - v^2 X) / (1 - v^2), -v^2 Y / (1 - v^2)),
///   R = v sqrt((X - x)^2 + Y^2) / (1 - v^2).
ApolloniusCircle apollonius(VehiclePos p, double x, double v);

/// Top-most point (O_x, O_y + R) of the circle: the evader's aim point when
/// it maximizes the capture height.
Vec2 evader_target_height(VehiclePos p, double x, double v);

/// Intersection of the circle with the X-axis farthest from (x, 0): the
/// evader's aim point in wall pursuit. When both intersections are equally
/// far (pursuer directly above the evader) the +X one is returned.
Vec2 evader_target_wall(VehiclePos p, double x, double v);

/// Capture height under optimal play,
///   H = v sqrt((X - x)^2 + Y^2) / (1 - v^2) - v^2 Y / (1 - v^2).
double vertical_height(VehiclePos p, double x, double v);

/// Capture time in wall pursuit: distance from (x, 0) to the far X-axis
/// intersection of the circle divided by v,
///   Ti = (sqrt(R^2 - O_y^2) + |O_x - x|) / v.
/// On the axis (Y = 0) this is |X - x| / (1 - v). Requires v >= 1e-9.
double intercept_time(VehiclePos p, double x, double v);

/// The closed form written with (v Y / (1 - v))^2 under the root and
/// |(x - v X) / (1 - v) - x| as the axial term. It does not match the wall
/// pursuit capture time; kept for side-by-side reporting. Empty when the
/// radicand is negative.
std::optional<double> intercept_time_unsquared_form(VehiclePos p, double x, double v);

enum class EvaderStrategy { height, wall };

struct PursuitTrace {
  double dt = 0.0;
  double speed = 0.0;
  std::vector<Vec2> pursuer;
  std::vector<Vec2> evader;
  bool captured = false;
  /// Contact instant located by extrapolating the last closing rate.
  double capture_time = 0.0;
  Vec2 capture_point;

  double time_at(std::size_t step) const { return static_cast<double>(step) * dt; }
};

/// Forward simulation of one pursuit. The evader runs straight at speed v
/// toward the aim point of `strategy` fixed at t = 0; the pursuer moves at
/// unit speed keeping the line of sight parallel to its initial direction.
/// Stops once the separation is at most capture_radius, or at the time cap
/// 10 |p0 - (x0, 0)| / (1 - v).
PursuitTrace simulate_pursuit(VehiclePos p0, double x0, double v, EvaderStrategy strategy,
                              double dt = 1e-4, double capture_radius = 2e-4);

enum class PursuerCell { first, second, both };

/// Two-pursuer classification of an arrival at (x, 0). `first` when the
/// circle with respect to p1 lies inside the circle with respect to p2 (only
/// p1 moves), `second` for the reverse, `both` otherwise.
PursuerCell classify_two_pursuer(double x, VehiclePos p1, VehiclePos p2, double v);

}  // namespace intercept
