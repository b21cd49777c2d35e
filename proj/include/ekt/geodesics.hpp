#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ekt/core.hpp"

namespace ekt {

struct GeodesicState {
  PointE point;
  FrameVector velocity;
};

struct GeodesicDerivative {
  CoordVector position;
  FrameVector velocity;
};

// Right-hand side of the geodesic system in (x, y, z, a1, a2, a3).
GeodesicDerivative geodesic_rhs(const SpaceParams& sp, const GeodesicState& s);

namespace family {
struct Numeric {};
struct NilClosed {
  double phi = 0, theta = 0;
};
struct Sl2Horizontal {};
struct Sl2Elliptic {
  double a = 0;
};
struct Sl2Parabolic {};
struct Sl2Hyperbolic {
  double a = 0;
};
struct Product {};
}  // namespace family

using GeodesicFamily = std::variant<family::Numeric, family::NilClosed, family::Sl2Horizontal,
                                    family::Sl2Elliptic, family::Sl2Parabolic,
                                    family::Sl2Hyperbolic, family::Product>;

std::string family_name(const GeodesicFamily& f);

struct GeodesicSpec {
  PointE start;
  FrameVector direction;
  GeodesicFamily family = family::Numeric{};
};

// Builders that fill in the initial direction implied by the family.
GeodesicSpec nil_spec(double tau, double phi, double theta, PointE start = {});
GeodesicSpec sl2_spec(const SpaceParams& sp, const GeodesicFamily& f);
GeodesicSpec product_spec(const SpaceParams& sp, const FrameVector& direction, PointE start = {});

void validate(const SpaceParams& sp, const GeodesicSpec& spec);

struct GeodesicSample {
  double t = 0;
  PointE point;
  FrameVector velocity;
};

// Adaptive Dormand-Prince integration; samples at n_samples equally spaced times in [0, t_end].
std::vector<GeodesicSample> integrate_geodesic(const SpaceParams& sp, const GeodesicSpec& spec,
                                               double t_end, double tol,
                                               std::size_t n_samples = 101);

// S̃L₂ families through the origin with initial direction in the (E2, E3) plane, written for any
// arithmetic type T (complex-step velocities, extended-precision checks). No validation.
template <class T>
std::array<T, 3> sl2_point(const SpaceParams& sp, const GeodesicFamily& f, T t) {
  using std::atan;
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  using std::tanh;
  // Derived constants are formed in T so extended-precision evaluations stay consistent.
  const double k = sp.kappa(), tau = sp.tau();
  const T rk = sqrt(T(-k));
  if (std::holds_alternative<family::Sl2Horizontal>(f))
    return {T(0.0), (2.0 / rk) * tanh(0.5 * rk * t), T(0.0)};
  if (const auto* e = std::get_if<family::Sl2Elliptic>(&f)) {
    const double a = e->a, a2 = a * a;
    const T D = sqrt(T((4.0 - k * a2) * (4.0 - k * a2) + 64.0 * a2 * tau * tau));
    const T m = 2.0 * (4.0 + k * a2) * tau / D;
    const T mt = m * t;
    const T den = 16.0 + k * k * a2 * a2 + 8.0 * k * a2 * cos(mt);
    const T sh = sin(0.5 * mt);
    const T x = 4.0 * a * (k * a2 - 4.0) * (2.0 * sh * sh) / den;
    const T y = 4.0 * a * (k * a2 + 4.0) * sin(mt) / den;
    const T z = (4.0 + a2 * (8.0 * tau * tau - k)) / D * t +
                (4.0 * tau / k) * atan(-k * a2 * sin(mt) / (4.0 + k * a2 * cos(mt)));
    return {x, y, z};
  }
  if (std::holds_alternative<family::Sl2Parabolic>(f)) {
    const T q = sqrt(T(4.0 * tau * tau - k));
    const T den = 4.0 * tau * tau - k * (1.0 + tau * tau * t * t);
    const T x = -2.0 * rk * tau * tau * t * t / den;
    const T y = 2.0 * tau * q * t / den;
    const T z = q / rk * t + (4.0 * tau / k) * atan(tau * rk / q * t);
    return {x, y, z};
  }
  if (const auto* h = std::get_if<family::Sl2Hyperbolic>(&f)) {
    const double a = h->a, a2 = a * a;
    const T q = sqrt(T(-k * a2 - 4.0));
    const T r = sqrt(T(1.0 + a2 * tau * tau));
    const T m = tau * q / (2.0 * r);
    const T mt = m * t;
    const T ch = cosh(mt), shh = sinh(mt);
    const T den = 4.0 + k * a2 * ch * ch;
    const T x = 4.0 * a * shh * shh / den;
    const T y = -a * q * (2.0 * shh * ch) / den;
    const T z = (k - 4.0 * tau * tau) / (k * r) * t + (4.0 * tau / k) * atan(2.0 * tanh(mt) / q);
    return {x, y, z};
  }
  throw InvalidArgument("not an S~L2 closed-form family");
}

struct CurvePoint {
  PointE point;
  CoordVector velocity;
};

// Closed forms. Each returns position and exact coordinate velocity.
CurvePoint nil_geodesic(double tau, double phi, double theta, double t);
PointE nil_geodesic_closed(double tau, double phi, double theta, double t);
CurvePoint sl2_geodesic(const SpaceParams& sp, const GeodesicFamily& f, double t);
PointE sl2_geodesic_closed(const SpaceParams& sp, const GeodesicFamily& f, double t);
// Geodesic of H²(κ)×ℝ from the origin with the given unit frame direction.
CurvePoint product_geodesic(const SpaceParams& sp, const FrameVector& direction, double t);

// Closed-form sample for any non-numeric spec (translated to spec.start).
GeodesicSample closed_form_sample(const SpaceParams& sp, const GeodesicSpec& spec, double t);
bool has_closed_form(const GeodesicSpec& spec);

// |a'(t) − rhs| along a curve with exact velocity, a' by central differences of step h.
template <class Curve>
double ode_residual(const SpaceParams& sp, const Curve& curve, double t, double h = 1e-6);

// Nil₃ group law (x,y,z)·(x',y',z') = (x+x', y+y', z+z'+τ(xy'−yx')).
PointE nil_multiply(double tau, const PointE& p, const PointE& q);
PointE nil_inverse(const PointE& p);

// Maximum height of the Nil₃ ball of radius R centered at the origin.
double nil_max_height(double tau, double R);
double zeta_r(double tau, double R, double s);
double zeta_r_prime(double tau, double R, double s);
// Roots of ζ_R' in (0, 2τR], found by sign scan and bracketing.
std::vector<double> zeta_r_critical_points(double tau, double R, std::size_t scan = 4096);

double sl2_max_height_bound(const SpaceParams& sp, double R);

// Hyperbolic distance in the model disk of curvature κ < 0 (Euclidean distance when κ = 0).
double base_distance(const SpaceParams& sp, BasePoint p, BasePoint q);

struct DistanceResult {
  double value = 0;
  double lower = 0;
  double upper = 0;
  bool exact = true;  // false means [lower, upper] is only a bracket
  int branches = 0;   // geodesic branches found (Nil₃)
};

DistanceResult distance(const SpaceParams& sp, const PointE& p, const PointE& q,
                        double tol = 1e-12);

// Nil₃/ℝ³ distance from the origin using only the minimizing branch.
double nil_distance_from_origin(double tau, const PointE& p, double tol = 1e-12);

double delta_alpha(double alpha, const PointE& p);

template <class Curve>
double ode_residual(const SpaceParams& sp, const Curve& curve, double t, double h) {
  auto frame_at = [&](double s) {
    const CurvePoint c = curve(s);
    return GeodesicState{c.point, coord_to_frame(sp, c.point, c.velocity)};
  };
  const GeodesicState s0 = frame_at(t);
  const GeodesicState sp1 = frame_at(t + h);
  const GeodesicState sm1 = frame_at(t - h);
  const FrameVector fd = (0.5 / h) * (sp1.velocity - sm1.velocity);
  return (fd - geodesic_rhs(sp, s0).velocity).norm();
}

}  // namespace ekt
