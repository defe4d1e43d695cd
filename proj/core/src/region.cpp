#include "intercept/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace intercept {

Region::Region(std::vector<Interval> intervals, double snap) {
  std::erase_if(intervals, [](const Interval& iv) { return !(iv.hi >= iv.lo); });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const Interval& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi + snap) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }
  std::erase_if(intervals_, [snap](const Interval& iv) { return iv.length() <= snap; });
}

double Region::length() const {
  double total = 0.0;
  for (const Interval& iv : intervals_) {
    total += iv.length();
  }
  return total;
}

double Region::lo() const { return intervals_.empty() ? 0.0 : intervals_.front().lo; }
double Region::hi() const { return intervals_.empty() ? 0.0 : intervals_.back().hi; }

bool Region::contains(double x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [x](const Interval& iv) { return iv.contains(x); });
}

bool Region::contains_interior(double x, double tol) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [x, tol](const Interval& iv) {
    return iv.lo + tol < x && x < iv.hi - tol;
  });
}

Region Region::intersect(const Region& other, double snap) const {
  std::vector<Interval> out;
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    const double lo = std::max(a->lo, b->lo);
    const double hi = std::min(a->hi, b->hi);
    if (lo <= hi) {
      out.push_back({lo, hi});
    }
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  return Region(std::move(out), snap);
}

Region Region::complement(double width, double snap) const {
  std::vector<Interval> out;
  double cursor = 0.0;
  for (const Interval& iv : intervals_) {
    if (iv.lo > cursor) {
      out.push_back({cursor, std::min(iv.lo, width)});
    }
    cursor = std::max(cursor, iv.hi);
  }
  if (cursor < width) {
    out.push_back({cursor, width});
  }
  return Region(std::move(out), snap);
}

namespace {

double distance_to(const Region& r, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Interval& iv : r.intervals()) {
    const double d = x < iv.lo ? iv.lo - x : (x > iv.hi ? x - iv.hi : 0.0);
    best = std::min(best, d);
  }
  return best;
}

// sup over a in `from` of dist(a, to). dist(., to) is piecewise linear with
// local maxima only at gap midpoints of `to`, so the sup over an interval is
// attained at its endpoints or at such a midpoint inside it.
double directed_hausdorff(const Region& from, const Region& to) {
  const auto gaps = to.intervals();
  double worst = 0.0;
  for (const Interval& iv : from.intervals()) {
    worst = std::max({worst, distance_to(to, iv.lo), distance_to(to, iv.hi)});
    for (std::size_t k = 0; k + 1 < gaps.size(); ++k) {
      const double mid = 0.5 * (gaps[k].hi + gaps[k + 1].lo);
      if (iv.contains(mid)) {
        worst = std::max(worst, distance_to(to, mid));
      }
    }
  }
  return worst;
}

}  // namespace

double region_hausdorff(const Region& a, const Region& b) {
  if (a.empty() && b.empty()) {
    return 0.0;
  }
  if (a.empty() || b.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace intercept
