#pragma once

#include <cstdint>
#include <vector>

#include "ekt/core.hpp"
#include "ekt/fit.hpp"

namespace ekt {

struct BallSpec {
  BallSpec(const SpaceParams& sp, const PointE& center, double radius);
  SpaceParams sp;
  PointE center;
  double radius;
};

// Cylinder D × ]−h, h[ about the origin containing the ball of the same radius centered there.
struct BoundingCylinder {
  double disk_radius = 0;   // intrinsic radius of the base disk
  double model_radius = 0;  // Euclidean radius of the base disk in the model
  double half_height = 0;
  double volume = 0;
};

BoundingCylinder bounding_cylinder(const SpaceParams& sp, double R);
inline BoundingCylinder bounding_cylinder(const BallSpec& b) {
  return bounding_cylinder(b.sp, b.radius);
}

// Maximum height over the origin ball, as used for the cylinder.
double ball_height_bound(const SpaceParams& sp, double R);

enum class Membership { inside, outside, undetermined };

// Undetermined only happens in S̃L₂ where distances are bracketed.
Membership ball_membership(const BallSpec& ball, const PointE& p, double tol = 1e-12);
// Throws ConvergenceError when membership cannot be decided.
bool in_ball(const BallSpec& ball, const PointE& p, double tol = 1e-12);

struct VolumeEstimate {
  double value = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t failures = 0;  // undetermined membership
  double bounding_volume = 0;
};

// Rejection sampling in the bounding cylinder (uniform in the model volume form).
// Results depend only on (ball, n_samples, seed), never on the thread count.
VolumeEstimate mc_volume(const BallSpec& ball, std::uint64_t n_samples, std::uint64_t seed,
                         unsigned threads = 0);

// S̃L₂ bracket: lower counts certain hits, upper counts certain and undetermined samples.
struct VolumeBracket {
  VolumeEstimate lower, upper;
};
VolumeBracket mc_volume_bracket(const BallSpec& ball, std::uint64_t n_samples, std::uint64_t seed,
                                unsigned threads = 0);

GrowthFit volume_growth_fit(const std::vector<double>& radii,
                            const std::vector<VolumeEstimate>& volumes);

// Euclidean model radius of the base disk of intrinsic radius R.
double model_radius_of(const SpaceParams& sp, double R);
// Hyperbolic (or Euclidean) area of the base disk of intrinsic radius R.
double base_disk_area(const SpaceParams& sp, double R);

}  // namespace ekt
