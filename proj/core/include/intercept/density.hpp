#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "intercept/errors.hpp"
#include "intercept/quadrature.hpp"
#include "intercept/region.hpp"

namespace intercept {

/// Arrival density on the generator [0, W]: a continuous piecewise-linear
/// function, normalized to unit mass at construction. Immutable.
class Density {
 public:
  struct Breakpoint {
    double x = 0.0;
    double value = 0.0;
  };

  struct Moments {
    double centroid = 0.0;
    double spread = 0.0;
  };

  static Density uniform(double width);

  /// Breakpoints must start at x = 0, be strictly increasing in x, and carry
  /// non-negative values with positive total mass. The last x is the width.
  static Density piecewise_linear(std::vector<Breakpoint> points);

  double width() const { return points_.back().x; }
  /// Maximum of the density.
  double bound() const { return bound_; }
  /// Largest absolute slope between breakpoints.
  double lipschitz() const { return lipschitz_; }
  std::span<const Breakpoint> breakpoints() const { return points_; }

  double evaluate(double x) const;
  double cdf(double x) const;
  /// Exact probability mass of a region.
  double mass(const Region& region) const;

  /// Integral of f(x) * density(x) over [iv.lo, iv.hi]. Panels are split at
  /// density breakpoints and at the ascending `splits` (kinks of f); each
  /// panel uses adaptive order-20 Gauss-Legendre.
  template <class F>
  auto integrate(Interval iv, F&& f, std::span<const double> splits = {},
                 quadrature::Tolerance tol = {}) const;

  template <class F>
  auto integrate(const Region& region, F&& f, std::span<const double> splits = {},
                 quadrature::Tolerance tol = {}) const {
    using T = std::decay_t<std::invoke_result_t<F&, double>>;
    T total{};
    for (const Interval& iv : region.intervals()) {
      total += integrate(iv, f, splits, tol);
    }
    return total;
  }

  template <class F>
  auto integrate(F&& f, std::span<const double> splits = {},
                 quadrature::Tolerance tol = {}) const {
    return integrate(Interval{0.0, width()}, f, splits, tol);
  }

  /// Mean and standard deviation of the arrival abscissa.
  Moments centroid_and_spread() const;

  /// Smallest x with cdf(x) = 1/2.
  double median() const;

 private:
  explicit Density(std::vector<Breakpoint> points);

  void check_interval(Interval iv) const;
  std::size_t segment_of(double x) const;

  std::vector<Breakpoint> points_;
  std::vector<double> cumulative_;
  double bound_ = 0.0;
  double lipschitz_ = 0.0;
};

template <class F>
auto Density::integrate(Interval iv, F&& f, std::span<const double> splits,
                        quadrature::Tolerance tol) const {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  check_interval(iv);
  T total{};
  if (!(iv.hi > iv.lo)) {
    return total;
  }
  std::size_t seg = segment_of(iv.lo);
  double cursor = iv.lo;
  while (cursor < iv.hi && seg + 1 < points_.size()) {
    const Breakpoint& p0 = points_[seg];
    const Breakpoint& p1 = points_[seg + 1];
    const double seg_end = std::min(p1.x, iv.hi);
    const double slope = (p1.value - p0.value) / (p1.x - p0.x);
    auto weighted = [&](double x) { return (p0.value + slope * (x - p0.x)) * f(x); };
    double a = cursor;
    for (double s : splits) {
      if (s > a && s < seg_end) {
        total += quadrature::integrate(weighted, a, s, tol);
        a = s;
      }
    }
    total += quadrature::integrate(weighted, a, seg_end, tol);
    cursor = seg_end;
    ++seg;
  }
  return total;
}

}  // namespace intercept
