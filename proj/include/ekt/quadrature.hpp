#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ekt/core.hpp"

namespace ekt {

// Region of M²(κ) described in model polar coordinates about the base origin.
struct PolarRegion {
  double max_radius = 0;  // model (Euclidean) radius
  double min_radius = 0;
  std::function<bool(BasePoint)> contains;  // empty means "everything"
  // Angles where the region changes discontinuously; the angular rule uses panels between them
  // instead of the periodic trapezoid rule.
  std::vector<double> angular_breaks;
};

struct QuadratureOptions {
  int angular = 64;      // rays at level 0
  int radial_scan = 64;  // predicate samples per ray at level 0
  int max_levels = 5;
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  double bisect_tol = 1e-13;
  unsigned threads = 1;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;  // difference between the last two levels
  int levels = 0;
  bool converged = false;
};

// ∫_region f dA with dA = λ² dx dy. Levels double both angular and radial resolution; the
// estimate is accepted when two consecutive levels agree to rel_tol.
QuadratureResult integrate_polar(const SpaceParams& sp, const std::function<double(BasePoint)>& f,
                                 const PolarRegion& region, const QuadratureOptions& opts = {});

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int order);

// Maximal subintervals of [a, b] where pred holds, found by sampling n points and bisecting.
std::vector<std::pair<double, double>> find_segments(const std::function<bool(double)>& pred,
                                                     double a, double b, int n, double tol);

}  // namespace ekt
