#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ekt/graphs.hpp"

namespace ekt {

struct ExampleSurface {
  std::string name;
  GraphSurface graph;
  // Reference quantities as functions of a radius.
  std::map<std::string, std::function<double(double)>> closed_forms;
  bool minimal = true;
  // Σ∩B_R equals the intrinsic ball of radius R (umbrellas).
  bool intrinsic_equals_extrinsic = false;
  // u extends continuously by zero to the boundary of its domain.
  bool zero_boundary = false;
};

// u ≡ 0 over the whole base. closed_forms: "area" (exact area of Σ∩B_R) and, for κ < 0,
// "leading" (the exponential leading term of the area).
ExampleSurface umbrella(const SpaceParams& sp);
// u = ax + by in Nil₃(τ) or ℝ³.
ExampleSurface affine_plane(double tau, double a, double b);
// f_θ. closed_forms: "intrinsic_lower" (area of the diamond |x|+|y| < R for θ = 0).
ExampleSurface fmp_surface(double tau, double theta);

// Upper half of the minimal catenoid with neck radius E in Nil₃(τ), as a graph over
// E < r < r_max (r_max may be +inf) vanishing on r = E. closed_forms: "height" h(r).
ExampleSurface catenoid(double tau, double E,
                        double r_max = std::numeric_limits<double>::infinity(),
                        double tol = 1e-12);
double catenoid_height(double tau, double E, double r, double tol = 1e-12);
double catenoid_slope(double tau, double E, double r);  // h'(r)

struct ProfileSample {
  double t = 0;  // arclength
  double h = 0, r = 0, alpha = 0;
};

struct CatenoidProfile {
  double E = 0, tau = 0, H = 0;
  std::vector<ProfileSample> samples;
  // max |r cos α + H r² − E| over the samples.
  double first_integral_drift() const;
};

// Rotational profile with constant mean curvature H in Nil₃(τ) from the given initial sample,
// integrated over arclength [initial.t, t_end].
CatenoidProfile cmc_profile(double tau, double H, const ProfileSample& initial, double t_end,
                            double tol = 1e-10, std::size_t n_samples = 201);
// H = 0 profile starting at the neck (r = E, α = 0, h = 0).
CatenoidProfile catenoid_profile(double tau, double E, double t_end, double tol = 1e-10,
                                 std::size_t n_samples = 201);

// Area of the domain of a Scherk-type graph over an ideal polygon with 2n vertices.
double ideal_polygon_area(double kappa, int n, double H = 0);
// Hyperbolic area of the regular ideal 2n-gon by quadrature over its 2n central sectors.
double ideal_polygon_area_numeric(double kappa, int n);

// Registry used by the CLI. Parameters that a name does not use are rejected.
std::vector<std::string> example_names();
ExampleSurface example_by_name(const std::string& name, const SpaceParams& sp,
                               const std::map<std::string, double>& params = {});

}  // namespace ekt
