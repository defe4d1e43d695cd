#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>
#include <utility>

#include "intercept/vec2.hpp"

namespace intercept::quadrature {

inline constexpr int kGaussOrder = 20;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

namespace detail {

// Roots of P_n by Newton iteration from the Chebyshev-like initial guess;
// weights 2 / ((1 - x^2) P_n'(x)^2).
inline GaussRule make_gauss_legendre_rule() {
  GaussRule rule;
  constexpr int n = kGaussOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(Vec2 v) { return std::max(std::abs(v.x), std::abs(v.y)); }

}  // namespace detail

inline const GaussRule& gauss_legendre_rule() {
  static const GaussRule rule = detail::make_gauss_legendre_rule();
  return rule;
}

/// Fixed-order Gauss-Legendre estimate of the integral of f over [a, b].
/// f may return double or Vec2.
template <class F>
auto gauss_legendre(F&& f, double a, double b) {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  const GaussRule& rule = gauss_legendre_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T sum{};
  for (int i = 0; i < kGaussOrder; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

struct Tolerance {
  /// Target absolute error for one panel.
  double absolute = 1e-10;
  /// Maximum number of bisections of a panel.
  int max_depth = 40;
};

namespace detail {

template <class F, class T>
T refine(F& f, double a, double b, const T& whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const T left = gauss_legendre(f, a, mid);
  const T right = gauss_legendre(f, mid, b);
  const T halves = left + right;
  const double diff = magnitude(halves - whole);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * magnitude(halves);
  if (diff <= std::max(tol, floor) || depth <= 0 || !(mid > a && mid < b)) {
    return halves;
  }
  return refine(f, a, mid, left, 0.5 * tol, depth - 1) +
         refine(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Order-20 Gauss-Legendre on [a, b], bisected where the two-half estimate
/// disagrees with the whole-panel estimate by more than the tolerance.
template <class F>
auto integrate(F&& f, double a, double b, Tolerance tol = {}) {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  if (!(b > a)) {
    return T{};
  }
  const T whole = gauss_legendre(f, a, b);
  return detail::refine(f, a, b, whole, tol.absolute, tol.max_depth);
}

}  // namespace intercept::quadrature
