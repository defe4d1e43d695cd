#include "intercept/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "intercept/errors.hpp"

namespace intercept::oracles {

double midpoint_sum(const Density& d, const std::function<double(double)>& f, double lo,
                    double hi, double step) {
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  if (n == 0) {
    return 0.0;
  }
  const double h = (hi - lo) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const double x = lo + (static_cast<double>(s) + 0.5) * h;
    sum += f(x) * d.evaluate(x);
  }
  return sum * h;
}

double simpson(const Density& d, const std::function<double(double)>& f, double lo, double hi,
               std::size_t panels) {
  if (panels % 2 != 0) {
    ++panels;
  }
  const double h = (hi - lo) / static_cast<double>(panels);
  auto g = [&](double x) { return f(x) * d.evaluate(std::clamp(x, lo, hi)); };
  double sum = g(lo) + g(hi);
  for (std::size_t s = 1; s < panels; ++s) {
    sum += (s % 2 == 1 ? 4.0 : 2.0) * g(lo + static_cast<double>(s) * h);
  }
  return sum * h / 3.0;
}

Vec2 central_difference(const std::function<double(Vec2)>& f, Vec2 p, double h) {
  return {(f({p.x + h, p.y}) - f({p.x - h, p.y})) / (2.0 * h),
          (f({p.x, p.y + h}) - f({p.x, p.y - h})) / (2.0 * h)};
}

double expected_cost_simpson(VehiclePos p, const CostCoeffs& k, const Density& d,
                             std::size_t panels) {
  return simpson(d, [&](double x) { return generic_cost(p, x, k); }, 0.0, d.width(), panels);
}

Vec2 grid_argmin(const std::function<double(Vec2)>& f, Box box, double final_step) {
  // Coarsest spacing: a power-of-ten multiple of final_step with at most
  // ~200 nodes across the wider side of the box.
  const double extent = std::max(box.x_hi - box.x_lo, box.y_hi - box.y_lo);
  double step = final_step;
  while (extent / step > 200.0) {
    step *= 10.0;
  }
  Box window = box;
  Vec2 best{box.x_lo, box.y_lo};
  for (;;) {
    double best_value = std::numeric_limits<double>::infinity();
    // Nodes sit on the global lattice x_lo + k step so the final stage is a
    // true grid of spacing final_step.
    const double kx0 = std::ceil((window.x_lo - box.x_lo) / step - 1e-9);
    const double kx1 = std::floor((window.x_hi - box.x_lo) / step + 1e-9);
    const double ky0 = std::ceil((window.y_lo - box.y_lo) / step - 1e-9);
    const double ky1 = std::floor((window.y_hi - box.y_lo) / step + 1e-9);
    for (double kx = kx0; kx <= kx1; kx += 1.0) {
      for (double ky = ky0; ky <= ky1; ky += 1.0) {
        const Vec2 node{box.x_lo + kx * step, box.y_lo + ky * step};
        const double value = f(node);
        if (value < best_value) {
          best_value = value;
          best = node;
        }
      }
    }
    if (step <= final_step * (1.0 + 1e-9)) {
      return best;
    }
    window = {std::max(box.x_lo, best.x - 2.0 * step), std::min(box.x_hi, best.x + 2.0 * step),
              std::max(box.y_lo, best.y - 2.0 * step), std::min(box.y_hi, best.y + 2.0 * step)};
    step /= 10.0;
  }
}

double grid_argmin_1d(const std::function<double(double)>& f, double lo, double hi,
                      double step) {
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  double best = lo;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s <= n; ++s) {
    const double x = lo + static_cast<double>(s) * step;
    const double value = f(x);
    if (value < best_value) {
      best_value = value;
      best = x;
    }
  }
  return best;
}

double median_by_scan(const Density& d, double step) {
  const double width = d.width();
  return grid_argmin_1d(
      [&](double center) {
        return midpoint_sum(d, [center](double x) { return std::abs(center - x); }, 0.0, width,
                            width * 1e-4);
      },
      0.0, width, step);
}

Region dominance_by_scan(VehiclePos pi, VehiclePos pj, const GameParams& g, double step) {
  const double width = g.width();
  const CostCoeffs k = CostCoeffs::constrained_time(g.target_speed());
  auto wins = [&](double x) { return generic_cost(pi, x, k) <= generic_cost(pj, x, k); };
  const auto n = static_cast<std::size_t>(std::ceil(width / step));
  const double h = width / static_cast<double>(n);
  std::vector<Interval> out;
  bool inside = wins(0.0);
  double start = 0.0;
  for (std::size_t s = 1; s <= n; ++s) {
    const double x = static_cast<double>(s) * h;
    const bool now = wins(x);
    if (now != inside) {
      const double edge = x - 0.5 * h;
      if (inside) {
        out.push_back({start, edge});
      } else {
        start = edge;
      }
      inside = now;
    }
  }
  if (inside) {
    out.push_back({start, width});
  }
  return Region(std::move(out));
}

std::size_t argmin_vehicle(std::span<const VehiclePos> positions, double x, double v) {
  const CostCoeffs k = CostCoeffs::constrained_time(v);
  std::size_t best = 0;
  double best_time = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double t = generic_cost(positions[i], x, k);
    if (t < best_time) {
      best_time = t;
      best = i;
    }
  }
  return best;
}

}  // namespace intercept::oracles
