#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "intercept/density.hpp"
#include "intercept/vec2.hpp"

namespace intercept::app {

/// Seeded sampler. Draws are mapped from raw mt19937_64 output by hand so
/// sequences are identical across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1p-53;
    return lo + (hi - lo) * u;
  }

  VehiclePos position(double width, double y_lo, double y_hi) {
    const double x = uniform(0.0, width);
    return {x, uniform(y_lo, y_hi)};
  }

  /// m positions in [0, W] x [y_lo, y_hi) with pairwise distance at least
  /// min_separation (redrawn until it holds).
  std::vector<VehiclePos> configuration(std::size_t m, double width, double y_lo, double y_hi,
                                        double min_separation) {
    std::vector<VehiclePos> out;
    while (out.size() < m) {
      const VehiclePos p = position(width, y_lo, y_hi);
      bool ok = true;
      for (const VehiclePos& q : out) {
        ok = ok && distance(p, q) >= min_separation;
      }
      if (ok) {
        out.push_back(p);
      }
    }
    return out;
  }

  /// Random continuous piecewise-linear density with `pieces` equal-width
  /// pieces and breakpoint values in [0.1, 2).
  Density density(double width, std::size_t pieces) {
    std::vector<Density::Breakpoint> points;
    for (std::size_t s = 0; s <= pieces; ++s) {
      const double x = width * static_cast<double>(s) / static_cast<double>(pieces);
      points.push_back({x, uniform(0.1, 2.0)});
    }
    return Density::piecewise_linear(std::move(points));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace intercept::app
