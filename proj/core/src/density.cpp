#include "intercept/density.hpp"

#include <cmath>
#include <string>

namespace intercept {

Density Density::uniform(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw DomainError("density width must be positive and finite");
  }
  return Density({{0.0, 1.0 / width}, {width, 1.0 / width}});
}

Density Density::piecewise_linear(std::vector<Breakpoint> points) {
  if (points.size() < 2) {
    throw DomainError("density needs at least two breakpoints");
  }
  if (points.front().x != 0.0) {
    throw DomainError("first density breakpoint must be at x = 0");
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!std::isfinite(points[k].x) || !std::isfinite(points[k].value)) {
      throw DomainError("density breakpoint " + std::to_string(k) + " is not finite");
    }
    if (points[k].value < 0.0) {
      throw DomainError("density breakpoint " + std::to_string(k) + " is negative");
    }
    if (k > 0 && !(points[k].x > points[k - 1].x)) {
      throw DomainError("density breakpoints must be strictly increasing (index " +
                        std::to_string(k) + ")");
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    total += 0.5 * (points[k].value + points[k + 1].value) * (points[k + 1].x - points[k].x);
  }
  if (!(total > 0.0)) {
    throw DomainError("density has zero mass");
  }
  for (Breakpoint& p : points) {
    p.value /= total;
  }
  return Density(std::move(points));
}

Density::Density(std::vector<Breakpoint> points) : points_(std::move(points)) {
  cumulative_.reserve(points_.size());
  cumulative_.push_back(0.0);
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    const double h = points_[k + 1].x - points_[k].x;
    cumulative_.push_back(cumulative_.back() + 0.5 * (points_[k].value + points_[k + 1].value) * h);
    lipschitz_ = std::max(lipschitz_, std::abs(points_[k + 1].value - points_[k].value) / h);
  }
  for (const Breakpoint& p : points_) {
    bound_ = std::max(bound_, p.value);
  }
}

void Density::check_interval(Interval iv) const {
  if (!(iv.lo >= 0.0 && iv.hi <= width() && iv.lo <= iv.hi)) {
    throw DomainError("interval [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                      "] is not inside the generator");
  }
}

std::size_t Density::segment_of(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double value, const Breakpoint& p) { return value < p.x; });
  const auto idx = static_cast<std::size_t>(std::distance(points_.begin(), it));
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, points_.size() - 2);
}

double Density::evaluate(double x) const {
  if (!(x >= 0.0 && x <= width())) {
    throw DomainError("x = " + std::to_string(x) + " is outside the generator");
  }
  const std::size_t k = segment_of(x);
  const Breakpoint& p0 = points_[k];
  const Breakpoint& p1 = points_[k + 1];
  const double t = (x - p0.x) / (p1.x - p0.x);
  return p0.value + t * (p1.value - p0.value);
}

double Density::cdf(double x) const {
  if (x <= 0.0) {
    return 0.0;
  }
  if (x >= width()) {
    return 1.0;
  }
  const std::size_t k = segment_of(x);
  const double t = x - points_[k].x;
  return cumulative_[k] + 0.5 * (points_[k].value + evaluate(x)) * t;
}

double Density::mass(const Region& region) const {
  double total = 0.0;
  for (const Interval& iv : region.intervals()) {
    check_interval(iv);
    total += cdf(iv.hi) - cdf(iv.lo);
  }
  return total;
}

Density::Moments Density::centroid_and_spread() const {
  const double centroid = integrate([](double x) { return x; });
  const double variance = integrate([centroid](double x) { return (centroid - x) * (centroid - x); },
                                    std::span<const double>(&centroid, 1));
  return {centroid, std::sqrt(std::max(variance, 0.0))};
}

double Density::median() const {
  constexpr double half = 0.5;
  std::size_t k = 0;
  while (k + 2 < points_.size() && cumulative_[k + 1] < half) {
    ++k;
  }
  // CDF on the segment: C0 + v0 t + (s / 2) t^2; root in the stable form.
  const Breakpoint& p0 = points_[k];
  const Breakpoint& p1 = points_[k + 1];
  const double h = p1.x - p0.x;
  const double slope = (p1.value - p0.value) / h;
  const double rest = half - cumulative_[k];
  if (rest <= 0.0) {
    return p0.x;
  }
  const double disc = std::max(p0.value * p0.value + 2.0 * slope * rest, 0.0);
  const double t = 2.0 * rest / (p0.value + std::sqrt(disc));
  return p0.x + std::clamp(t, 0.0, h);
}

}  // namespace intercept
