#pragma once

#include "intercept/density.hpp"

namespace intercept::testing {

// Ramp density: 8x / W^2 on [0, W/4], then linear down to zero at W.
inline Density ramp(double width = 1.0) {
  return Density::piecewise_linear({{0.0, 0.0}, {0.25 * width, 2.0 / width}, {width, 0.0}});
}

inline Density triangle(double peak, double half_width) {
  return Density::piecewise_linear({{0.0, 0.0},
                                    {peak - half_width, 0.0},
                                    {peak, 1.0},
                                    {peak + half_width, 0.0},
                                    {1.0, 0.0}});
}

}  // namespace intercept::testing
