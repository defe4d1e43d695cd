#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "intercept/cost.hpp"
#include "intercept/region.hpp"
#include "intercept/vec2.hpp"

namespace intercept {

/// Endpoint snapping tolerance used when regions are combined.
inline double snap_tolerance(double width) { return 1e-12 * width; }

/// One dominance region per vehicle, in vehicle order.
class Partition {
 public:
  Partition() = default;
  Partition(double width, std::vector<Region> regions)
      : width_(width), regions_(std::move(regions)) {}

  double width() const { return width_; }
  std::size_t size() const { return regions_.size(); }
  const Region& operator[](std::size_t i) const { return regions_[i]; }
  std::span<const Region> regions() const { return regions_; }

  /// Index of the region containing x, or of the nearest region when x
  /// falls in a rounding-sized gap between two regions.
  std::size_t owner_of(double x) const;

  /// Length of the union of all regions.
  double covered_length() const;
  /// Largest length shared by two distinct regions.
  double max_overlap() const;

 private:
  double width_ = 0.0;
  std::vector<Region> regions_;
};

/// Arrivals x in [0, W] for which vehicle i intercepts no later than
/// vehicle j under the constrained-target time. Boundary points are where a
/// point A on the perpendicular bisector of p_i p_j sits at height
/// v |A - p_i| above the generator.
Region pairwise_dominance(VehiclePos pi, VehiclePos pj, const GameParams& g);

/// Intersection over j != i of the pairwise regions, for every vehicle i.
/// Throws CoincidentVehiclesError naming the first coincident pair.
Partition dominance_partition(std::span<const VehiclePos> positions, const GameParams& g);

}  // namespace intercept
