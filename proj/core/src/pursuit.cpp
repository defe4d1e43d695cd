#include "intercept/pursuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "intercept/cost.hpp"
#include "intercept/errors.hpp"

namespace intercept {

namespace {

void check_speed(double v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError("evader speed must lie in (0, 1), got " + std::to_string(v));
  }
}

void check_height(VehiclePos p) {
  if (!(p.y >= 0.0)) {
    throw DomainError("pursuer below the generator, Y = " + std::to_string(p.y));
  }
}

}  // namespace

bool ApolloniusCircle::contains(const ApolloniusCircle& other, double tol) const {
  return distance(center, other.center) + other.radius <= radius + tol;
}

ApolloniusCircle apollonius(Vec2 pursuer, Vec2 evader, double v) {
  check_speed(v);
  const double d = distance(pursuer, evader);
  if (!(d > 0.0)) {
    throw DomainError("degenerate Apollonius circle: pursuer and evader coincide");
  }
  const double inv = 1.0 / (1.0 - v * v);
  return {(evader - v * v * pursuer) * inv, v * d * inv};
}

ApolloniusCircle apollonius(VehiclePos p, double x, double v) {
  return apollonius(p, Vec2{x, 0.0}, v);
}

Vec2 evader_target_height(VehiclePos p, double x, double v) {
  const ApolloniusCircle c = apollonius(p, x, v);
  return {c.center.x, c.center.y + c.radius};
}

Vec2 evader_target_wall(VehiclePos p, double x, double v) {
  const ApolloniusCircle c = apollonius(p, x, v);
  const double half_chord =
      std::sqrt(std::max(c.radius * c.radius - c.center.y * c.center.y, 0.0));
  // O_x - x = v^2 (x - X) / (1 - v^2), so the far side follows sign(x - X).
  const double side = (x - p.x) >= 0.0 ? 1.0 : -1.0;
  return {c.center.x + side * half_chord, 0.0};
}

double vertical_height(VehiclePos p, double x, double v) {
  check_height(p);
  return generic_cost(p, x, CostCoeffs::vertical_height(v));
}

double intercept_time(VehiclePos p, double x, double v) {
  if (!(v >= 1e-9 && v < 1.0)) {
    throw DomainError("wall pursuit needs 1e-9 <= v < 1, got " + std::to_string(v));
  }
  check_height(p);
  const double dx = std::abs(p.x - x);
  const double d2 = dx * dx + p.y * p.y;
  // R^2 - O_y^2 = v^2 (d^2 - v^2 Y^2) / (1 - v^2)^2, |O_x - x| = v^2 dx / (1 - v^2).
  double radicand = d2 - v * v * p.y * p.y;
  if (radicand < 0.0) {
    if (radicand < -1e-12 * std::max(d2, 1.0)) {
      throw InvariantError("intercept time radicand is negative for pursuer (" +
                           std::to_string(p.x) + ", " + std::to_string(p.y) +
                           "), x = " + std::to_string(x) + ", v = " + std::to_string(v));
    }
    radicand = 0.0;
  }
  return (std::sqrt(radicand) + v * dx) / (1.0 - v * v);
}

std::optional<double> intercept_time_unsquared_form(VehiclePos p, double x, double v) {
  if (!(v >= 1e-9 && v < 1.0)) {
    throw DomainError("wall pursuit needs 1e-9 <= v < 1, got " + std::to_string(v));
  }
  check_height(p);
  const double radius = v * std::hypot(p.x - x, p.y) / (1.0 - v * v);
  const double lift = v * p.y / (1.0 - v);
  const double radicand = radius * radius - lift * lift;
  if (radicand < 0.0) {
    return std::nullopt;
  }
  return (std::sqrt(radicand) + std::abs((x - v * p.x) / (1.0 - v) - x)) / v;
}

PursuitTrace simulate_pursuit(VehiclePos p0, double x0, double v, EvaderStrategy strategy,
                              double dt, double capture_radius) {
  check_speed(v);
  check_height(p0);
  if (!(dt > 0.0)) {
    throw DomainError("time step must be positive");
  }
  if (!(capture_radius >= dt)) {
    throw DomainError("capture radius must be at least the time step");
  }

  PursuitTrace trace;
  trace.dt = dt;
  trace.speed = v;
  Vec2 pursuer = p0;
  Vec2 evader{x0, 0.0};
  trace.pursuer.push_back(pursuer);
  trace.evader.push_back(evader);

  const double start_gap = distance(pursuer, evader);
  if (start_gap <= capture_radius) {
    trace.captured = true;
    trace.capture_point = evader;
    return trace;
  }

  const Vec2 aim = strategy == EvaderStrategy::height ? evader_target_height(p0, x0, v)
                                                      : evader_target_wall(p0, x0, v);
  const Vec2 to_aim = aim - evader;
  const double aim_dist = norm(to_aim);
  const Vec2 evader_velocity = aim_dist > 0.0 ? (v / aim_dist) * to_aim : Vec2{};

  const double time_cap = 10.0 * start_gap / (1.0 - v);
  const auto max_steps = static_cast<std::size_t>(std::ceil(time_cap / dt));

  for (std::size_t step = 0; step < max_steps; ++step) {
    const Vec2 los = evader - pursuer;
    const double gap = norm(los);
    const Vec2 dir = los / gap;
    // Pursuer velocity u = w + c dir with |u| = 1: relative motion stays on
    // the line of sight.
    const double along = dot(evader_velocity, dir);
    const double closing = -along + std::sqrt(along * along + 1.0 - v * v);
    if (gap <= capture_radius) {
      const double tail = gap / closing;
      trace.captured = true;
      trace.capture_time = trace.time_at(step) + tail;
      trace.capture_point = evader + tail * evader_velocity;
      return trace;
    }
    const Vec2 pursuer_velocity = evader_velocity + closing * dir;
    pursuer += dt * pursuer_velocity;
    evader += dt * evader_velocity;
    trace.pursuer.push_back(pursuer);
    trace.evader.push_back(evader);
  }
  trace.captured = false;
  trace.capture_time = trace.time_at(trace.pursuer.size() - 1);
  trace.capture_point = evader;
  return trace;
}

PursuerCell classify_two_pursuer(double x, VehiclePos p1, VehiclePos p2, double v) {
  if (p1 == p2) {
    throw CoincidentVehiclesError(0, 1);
  }
  const ApolloniusCircle first = apollonius(p1, x, v);
  const ApolloniusCircle second = apollonius(p2, x, v);
  if (second.contains(first)) {
    return PursuerCell::first;
  }
  if (first.contains(second)) {
    return PursuerCell::second;
  }
  return PursuerCell::both;
}

}  // namespace intercept
