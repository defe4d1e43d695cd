#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace intercept {

/// Closed interval [lo, hi] of the generator.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, sorted by position. Every
/// stored interval has positive length; an empty union is a valid region.
class Region {
 public:
  Region() = default;

  /// Sorts, merges overlapping intervals and intervals separated by a gap of
  /// at most `snap`, and drops intervals of length at most `snap`.
  explicit Region(std::vector<Interval> intervals, double snap = 0.0);

  static Region full(double width) { return Region({{0.0, width}}); }

  bool empty() const { return intervals_.empty(); }
  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t components() const { return intervals_.size(); }
  double length() const;
  double lo() const;
  double hi() const;
  bool contains(double x) const;
  /// True if x lies in an interval and at distance > tol from its endpoints.
  bool contains_interior(double x, double tol = 0.0) const;

  Region intersect(const Region& other, double snap = 0.0) const;
  /// Closure of [0, width] minus this region.
  Region complement(double width, double snap = 0.0) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Symmetric Hausdorff distance between two regions. Zero for two empty
/// regions, +infinity when exactly one is empty.
double region_hausdorff(const Region& a, const Region& b);

}  // namespace intercept
