#pragma once

#include <array>
#include <functional>
#include <optional>

#include "ekt/errors.hpp"

namespace ekt {

class SpaceParams {
 public:
  SpaceParams(double kappa, double tau);

  double kappa() const { return kappa_; }
  double tau() const { return tau_; }

  bool is_euclidean() const { return kappa_ == 0.0 && tau_ == 0.0; }
  bool is_nil() const { return kappa_ == 0.0 && tau_ > 0.0; }
  bool is_product() const { return kappa_ < 0.0 && tau_ == 0.0; }
  bool is_sl2() const { return kappa_ < 0.0 && tau_ > 0.0; }

  // √−κ; zero for κ = 0.
  double k() const { return k_; }
  // Euclidean radius of the model disk, +inf when κ = 0.
  double model_radius() const;

 private:
  double kappa_;
  double tau_;
  double k_;
};

struct BasePoint {
  double x = 0, y = 0;
};

struct PointE {
  double x = 0, y = 0, z = 0;
  BasePoint base() const { return {x, y}; }
};

struct FrameVector {
  double a1 = 0, a2 = 0, a3 = 0;
  double norm2() const { return a1 * a1 + a2 * a2 + a3 * a3; }
  double norm() const;
};

struct CoordVector {
  double dx = 0, dy = 0, dz = 0;
};

FrameVector operator+(const FrameVector& u, const FrameVector& v);
FrameVector operator-(const FrameVector& u, const FrameVector& v);
FrameVector operator*(double s, const FrameVector& v);
double dot(const FrameVector& u, const FrameVector& v);

bool in_model(const SpaceParams& sp, BasePoint p);
void require_in_model(const SpaceParams& sp, BasePoint p);

double lambda(const SpaceParams& sp, BasePoint p);
inline double lambda(const SpaceParams& sp, const PointE& p) { return lambda(sp, p.base()); }

FrameVector coord_to_frame(const SpaceParams& sp, const PointE& p, const CoordVector& v);
CoordVector frame_to_coord(const SpaceParams& sp, const PointE& p, const FrameVector& a);

// Metric coefficients g_ij in coordinates (x, y, z).
std::array<std::array<double, 3>, 3> coordinate_metric(const SpaceParams& sp, const PointE& p);

// ∇_{E_i} E_j at p, indices 0..2.
FrameVector connection(const SpaceParams& sp, const PointE& p, int i, int j);

// Frame-coefficient field. If `derivative` is set it returns the directional derivative of the
// coefficients along a coordinate vector; otherwise central differences with `fd_step` are used.
struct FrameField {
  std::function<FrameVector(const PointE&)> value;
  std::function<FrameVector(const PointE&, const CoordVector&)> derivative;
};

FrameVector covariant_derivative(const SpaceParams& sp, const FrameField& X, const FrameField& Y,
                                 const PointE& p, double fd_step = 1e-5);

double volume_form(const SpaceParams& sp, const PointE& p);

// Isometry of M²(κ) taking the origin to c; a translation for κ = 0, a Möbius map for κ < 0.
BasePoint base_translate(const SpaceParams& sp, BasePoint c, BasePoint p);
// Inverse of base_translate: takes c to the origin.
BasePoint base_translate_inverse(const SpaceParams& sp, BasePoint c, BasePoint p);
// Differential of base_translate at p applied to a coordinate vector (dx, dy).
BasePoint base_translate_differential(const SpaceParams& sp, BasePoint c, BasePoint p,
                                      BasePoint v);

}  // namespace ekt
