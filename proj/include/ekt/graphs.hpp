#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ekt/core.hpp"
#include "ekt/quadrature.hpp"

namespace ekt {

// Tangent vector of M²(κ) in the orthonormal frame (∂x/λ, ∂y/λ).
struct Vec2 {
  double e1 = 0, e2 = 0;
  double norm() const;
};

struct Gradient {
  double ux = 0, uy = 0;
};

struct Hessian {
  double uxx = 0, uxy = 0, uyy = 0;
};

// Domain shapes, in model coordinates.
namespace shape {
struct FullPlane {};
struct Disk {
  double radius;
};
struct Annulus {
  double inner, outer;  // outer may be +inf
};
struct Wedge {
  double angle;  // {0 < arg < angle}
};
struct HalfPlane {};  // {x > 0}
struct Polygon {
  std::vector<BasePoint> vertices;
};
struct IdealPolygon {
  int vertices;  // regular ideal polygon of H²(κ)
};
}  // namespace shape

using DomainShape = std::variant<shape::FullPlane, shape::Disk, shape::Annulus, shape::Wedge,
                                 shape::HalfPlane, shape::Polygon, shape::IdealPolygon>;

enum class BoundaryValues { finite, infinite };

// Straight segment origin + t·direction for t in [t0, t1] (t1 may be +inf), or a circle arc.
struct SegmentArc {
  BasePoint origin, direction;
  double t0 = 0, t1 = 0;
};
struct CircleArc {
  BasePoint center;
  double radius = 0, angle0 = 0, angle1 = 0;
};

struct BoundaryArc {
  std::variant<SegmentArc, CircleArc> geometry;
  BoundaryValues values = BoundaryValues::finite;
};

struct BaseDomain {
  DomainShape shape;
  std::function<bool(BasePoint)> contains;
  std::vector<BoundaryArc> boundary;
  std::vector<double> angular_breaks;  // polar angles where the domain jumps, if any
  double min_radius = 0;               // the domain avoids the model disk of this radius
  std::string describe() const;
};

BaseDomain full_plane();
BaseDomain disk_domain(double model_radius);
BaseDomain annulus_domain(double inner, double outer = std::numeric_limits<double>::infinity());
BaseDomain wedge_domain(double angle, BoundaryValues values = BoundaryValues::finite);
BaseDomain half_plane_domain(BoundaryValues values = BoundaryValues::finite);
// Convex polygon, vertices counterclockwise; one boundary tag per edge (vertex i to i+1).
BaseDomain polygon_domain(std::vector<BasePoint> vertices, std::vector<BoundaryValues> values);
// Regular ideal polygon with the given (even) number of vertices, one vertex-free edge centered
// on each direction 2πk/vertices.
BaseDomain ideal_polygon_domain(const SpaceParams& sp, int vertices,
                                BoundaryValues values = BoundaryValues::infinite);

struct GraphSurface {
  GraphSurface(const SpaceParams& sp, BaseDomain domain, std::function<double(BasePoint)> u,
               std::function<Gradient(BasePoint)> grad = {},
               std::function<Hessian(BasePoint)> hess = {});

  SpaceParams sp;
  BaseDomain domain;
  std::function<double(BasePoint)> u;
  std::function<Gradient(BasePoint)> grad;  // optional
  std::function<Hessian(BasePoint)> hess;   // optional

  double height(BasePoint p) const { return u(p); }
  // Analytic gradient if supplied, else central differences with step 1e-6.
  Gradient gradient(BasePoint p) const;
  bool has_hessian() const { return static_cast<bool>(hess); }
};

struct GraphFields {
  Vec2 z, grad_u, gu;
  double w = 1, nu = 1;
};

Vec2 z_field(const SpaceParams& sp, BasePoint p);
// ∇u in the orthonormal frame from coordinate partials.
Vec2 metric_gradient(const SpaceParams& sp, BasePoint p, Gradient g);
GraphFields graph_fields(const SpaceParams& sp, BasePoint p, Gradient g);
GraphFields graph_fields(const GraphSurface& g, BasePoint p);

enum class CurvatureMethod { automatic, analytic, finite_difference };

// H(u) = ½ div(Gu/W) in M²(κ).
double mean_curvature(const GraphSurface& g, BasePoint p,
                      CurvatureMethod method = CurvatureMethod::automatic);

// Ω ∩ D_R (R intrinsic), optionally further cut by an extra predicate.
PolarRegion region_in_disk(const GraphSurface& g, double R,
                           std::function<bool(BasePoint)> extra = {});

// ∫_region W dA.
QuadratureResult graph_area(const GraphSurface& g, const PolarRegion& region,
                            const QuadratureOptions& opts = {});

using HeightBound = std::function<double(double)>;
// h(R) from the bounding cylinder of the ambient space.
HeightBound default_height_bound(const SpaceParams& sp);

struct AreaBoundTerms {
  double base_area = 0;       // area(Ω(R))
  double z_integral = 0;      // ∫_{Ω(R)} |Z|
  double theta_length = 0;    // length(Θ(R)) = length(Ω ∩ ∂D_R)
  double lambda_length = 0;   // length(Λ(R)), boundary arcs with infinite values
  double gamma_length = 0;    // length(Γ(R)), boundary arcs with finite values
  double gamma_integral = 0;  // ∫_{Γ(R)} |u|
  double height = 0;          // h(R)
  double total = 0;
};

AreaBoundTerms lemma41_bound(const GraphSurface& g, double R, const HeightBound& h = {},
                             const QuadratureOptions& opts = {});
AreaBoundTerms lemma42_bound(const GraphSurface& g, double R, const HeightBound& h = {},
                             const QuadratureOptions& opts = {});

struct FactorizationResidual {
  double lhs = 0;  // ⟨Gu/W_u − Gv/W_v, Gu − Gv⟩
  double rhs = 0;  // ½ (W_u + W_v) |N_u − N_v|²
  double residual = 0;
};

FactorizationResidual factorization_identity_residual(const SpaceParams& sp, BasePoint p,
                                                      Gradient grad_u, Gradient grad_v);

// Calabi-Lee pairing in Nil₃: ∇v for the spacelike graph associated with u, and the residual
// |(1 − |∇v|²)(1 + |Gu|²) − 1|. Throws HypothesisError when |∇v| ≥ 1.
Vec2 lee_dual_gradient(const GraphSurface& g, BasePoint p);
double calabi_lee_residual(const GraphSurface& g, BasePoint p, Vec2 grad_v);

struct GradientHeightBounds {
  double B = 0;  // sup |Gu| / (1 + r²) over the samples
  double C = 0;  // sup |u| / (1 + r²)^{3/2} over the samples
  double B_inner = 0, C_inner = 0;  // same over the inner half of the radii
  bool growth_flagged = false;      // outer samples need a constant well above the inner one
};

GradientHeightBounds gradient_height_bounds(const GraphSurface& g, const std::vector<double>& radii,
                                            int angles = 64);

}  // namespace ekt
