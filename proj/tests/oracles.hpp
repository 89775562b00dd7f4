#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ppbench/distributions.hpp"

namespace ppbench::testing {

// Reference quantile in long double, independent of the library: Gumbel in closed
// form, Normal by Newton on erfc.
inline long double ref_quantile(Family family, long double p) {
  if (family == Family::Gumbel) return -std::log(-std::log(p));
  long double z = 0.0L;
  for (int it = 0; it < 100; ++it) {
    const long double f = 0.5L * std::erfc(-z / std::sqrt(2.0L)) - p;
    const long double d = std::exp(-0.5L * z * z) / std::sqrt(2.0L * std::numbers::pi_v<long double>);
    const long double step = f / d;
    z -= step;
    if (std::abs(step) < 1e-18L) break;
  }
  return z;
}

// Central finite differences (fourth-order accurate) of the reference quantile.
inline double fd_quantile_derivative(Family family, double p0, int order) {
  const long double p = p0;
  const long double h = 0.002L * std::min(p, 1.0L - p);
  auto q = [&](int k) { return ref_quantile(family, p + k * h); };
  long double v = 0.0L;
  switch (order) {
    case 1:
      v = (q(-2) - 8 * q(-1) + 8 * q(1) - q(2)) / (12 * h);
      break;
    case 2:
      v = (-q(-2) + 16 * q(-1) - 30 * q(0) + 16 * q(1) - q(2)) / (12 * h * h);
      break;
    case 3:
      v = (q(-3) - 8 * q(-2) + 13 * q(-1) - 13 * q(1) + 8 * q(2) - q(3)) / (8 * h * h * h);
      break;
    default:
      v = (-q(-3) + 12 * q(-2) - 39 * q(-1) + 56 * q(0) - 39 * q(1) + 12 * q(2) - q(3)) /
          (6 * h * h * h * h);
  }
  return static_cast<double>(v);
}

}  // namespace ppbench::testing
