#include "intercept/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "intercept/errors.hpp"

namespace intercept {

namespace {

// Boundary by direct comparison of the two times on a uniform grid. Only
// reached when the bisector quadratic degenerates to 0 = const.
Region scan_dominance(VehiclePos pi, VehiclePos pj, const GameParams& g) {
  const double width = g.width();
  const CostCoeffs k = CostCoeffs::constrained_time(g.target_speed());
  const double step = width * 1e-6;
  std::vector<Interval> out;
  bool inside = false;
  double start = 0.0;
  const auto n = static_cast<std::size_t>(std::ceil(width / step));
  for (std::size_t s = 0; s <= n; ++s) {
    const double x = std::min(static_cast<double>(s) * step, width);
    const bool wins = generic_cost(pi, x, k) <= generic_cost(pj, x, k);
    if (wins && !inside) {
      start = x;
      inside = true;
    } else if (!wins && inside) {
      out.push_back({start, x});
      inside = false;
    }
  }
  if (inside) {
    out.push_back({start, width});
  }
  return Region(std::move(out), snap_tolerance(width));
}

}  // namespace

std::size_t Partition::owner_of(double x) const {
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    for (const Interval& iv : regions_[i].intervals()) {
      const double d = x < iv.lo ? iv.lo - x : (x > iv.hi ? x - iv.hi : 0.0);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
  }
  return best;
}

double Partition::covered_length() const {
  std::vector<Interval> all;
  for (const Region& r : regions_) {
    all.insert(all.end(), r.intervals().begin(), r.intervals().end());
  }
  return Region(std::move(all)).length();
}

double Partition::max_overlap() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    for (std::size_t j = i + 1; j < regions_.size(); ++j) {
      worst = std::max(worst, regions_[i].intersect(regions_[j]).length());
    }
  }
  return worst;
}

Region pairwise_dominance(VehiclePos pi, VehiclePos pj, const GameParams& g) {
  if (pi == pj) {
    throw CoincidentVehiclesError(0, 1);
  }
  if (pi.y < 0.0 || pj.y < 0.0) {
    throw DomainError("vehicle below the generator");
  }
  const double width = g.width();
  const double v = g.target_speed();
  const double snap = snap_tolerance(width);
  auto clip = [width](double x) { return std::clamp(x, 0.0, width); };
  const double mid_x = 0.5 * (pi.x + pj.x);

  if (pi.y == pj.y) {
    if (pi.x < pj.x) {
      return Region({{0.0, clip(mid_x)}}, snap);
    }
    return Region({{clip(mid_x), width}}, snap);
  }

  const double theta = std::atan2(pj.y - pi.y, pj.x - pi.x) + std::numbers::pi / 2.0;
  const double sin_t = std::sin(theta);
  const double cos_t = std::cos(theta);
  const double sum_y = pi.y + pj.y;
  const Vec2 diff = pi - pj;
  const double qa = 4.0 * (sin_t * sin_t - v * v);
  const double qb = 4.0 * sum_y * sin_t;
  const double qc = sum_y * sum_y - v * v * dot(diff, diff);

  std::vector<double> roots;
  if (qa == 0.0) {
    if (qb == 0.0) {
      return scan_dominance(pi, pj, g);
    }
    roots.push_back(-qc / qb);
  } else {
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
      const double scale = std::max({qb * qb, std::abs(4.0 * qa * qc), 1.0});
      if (disc < -1e-12 * scale) {
        throw InvariantError("pairwise dominance quadratic has complex roots (discriminant " +
                             std::to_string(disc) + ")");
      }
      disc = 0.0;
    }
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    if (q == 0.0) {
      roots = {0.0, 0.0};
    } else {
      roots = {q / qa, qc / q};
    }
  }

  std::vector<double> boundary;
  for (double l : roots) {
    const double y = 0.5 * sum_y + sin_t * l;
    if (y > 0.0) {
      boundary.push_back(mid_x + cos_t * l);
    }
  }

  if (boundary.size() == 2) {
    const double x1 = std::min(boundary[0], boundary[1]);
    const double x2 = std::max(boundary[0], boundary[1]);
    if (pi.y < pj.y) {
      if (x2 < 0.0 || x1 > width) {
        return Region();
      }
      return Region({{clip(x1), clip(x2)}}, snap);
    }
    std::vector<Interval> parts;
    if (x1 > 0.0) {
      parts.push_back({0.0, clip(x1)});
    }
    if (x2 < width) {
      parts.push_back({clip(x2), width});
    }
    return Region(std::move(parts), snap);
  }
  if (boundary.size() == 1) {
    const double x = boundary[0];
    if (pi.x < pj.x) {
      return x < 0.0 ? Region() : Region({{0.0, clip(x)}}, snap);
    }
    return x > width ? Region() : Region({{clip(x), width}}, snap);
  }
  throw InvariantError("pairwise dominance: no boundary candidate above the generator");
}

Partition dominance_partition(std::span<const VehiclePos> positions, const GameParams& g) {
  const std::size_t m = positions.size();
  if (m == 0) {
    throw DomainError("partition needs at least one vehicle");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (positions[i] == positions[j]) {
        throw CoincidentVehiclesError(i, j);
      }
    }
  }
  const double width = g.width();
  const double snap = snap_tolerance(width);
  std::vector<Region> regions;
  regions.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Region region = Region::full(width);
    for (std::size_t j = 0; j < m && !region.empty(); ++j) {
      if (j != i) {
        region = region.intersect(pairwise_dominance(positions[i], positions[j], g), snap);
      }
    }
    regions.push_back(std::move(region));
  }
  return Partition(width, std::move(regions));
}

}  // namespace intercept
