#include "ekt/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ekt/balls.hpp"

namespace ekt {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;
}  // namespace

double Vec2::norm() const { return std::hypot(e1, e2); }

// ---------------------------------------------------------------------------------------------
// Domains

std::string BaseDomain::describe() const {
  return std::visit(
      overloaded{
          [](const shape::FullPlane&) { return std::string("full-plane"); },
          [](const shape::Disk& d) { return "disk(" + std::to_string(d.radius) + ")"; },
          [](const shape::Annulus& a) {
            return "annulus(" + std::to_string(a.inner) + "," + std::to_string(a.outer) + ")";
          },
          [](const shape::Wedge& w) { return "wedge(" + std::to_string(w.angle) + ")"; },
          [](const shape::HalfPlane&) { return std::string("halfplane"); },
          [](const shape::Polygon& p) {
            return "polygon(" + std::to_string(p.vertices.size()) + ")";
          },
          [](const shape::IdealPolygon& p) {
            return "ideal-polygon(" + std::to_string(p.vertices) + ")";
          },
      },
      shape);
}

BaseDomain full_plane() {
  BaseDomain d;
  d.shape = shape::FullPlane{};
  d.contains = [](BasePoint) { return true; };
  return d;
}

BaseDomain disk_domain(double r) {
  if (!(r > 0)) throw InvalidArgument("disk radius must be > 0");
  BaseDomain d;
  d.shape = shape::Disk{r};
  d.contains = [r](BasePoint p) { return p.x * p.x + p.y * p.y < r * r; };
  d.boundary.push_back({CircleArc{{0, 0}, r, 0, 2 * pi}, BoundaryValues::finite});
  return d;
}

BaseDomain annulus_domain(double inner, double outer) {
  if (!(inner > 0) || !(outer > inner)) throw InvalidArgument("annulus needs 0 < inner < outer");
  BaseDomain d;
  d.shape = shape::Annulus{inner, outer};
  d.contains = [inner, outer](BasePoint p) {
    const double r2 = p.x * p.x + p.y * p.y;
    return r2 > inner * inner && r2 < outer * outer;
  };
  d.boundary.push_back({CircleArc{{0, 0}, inner, 0, 2 * pi}, BoundaryValues::finite});
  if (std::isfinite(outer))
    d.boundary.push_back({CircleArc{{0, 0}, outer, 0, 2 * pi}, BoundaryValues::finite});
  d.min_radius = inner;
  return d;
}

BaseDomain wedge_domain(double angle, BoundaryValues values) {
  if (!(angle > 0) || !(angle < 2 * pi)) throw InvalidArgument("wedge angle must lie in (0, 2pi)");
  BaseDomain d;
  d.shape = shape::Wedge{angle};
  d.contains = [angle](BasePoint p) {
    if (p.x == 0 && p.y == 0) return false;
    double a = std::atan2(p.y, p.x);
    if (a < 0) a += 2 * pi;
    return a > 0 && a < angle;
  };
  d.boundary.push_back({SegmentArc{{0, 0}, {1, 0}, 0, inf}, values});
  d.boundary.push_back({SegmentArc{{0, 0}, {std::cos(angle), std::sin(angle)}, 0, inf}, values});
  d.angular_breaks = {0.0, angle};
  return d;
}

BaseDomain half_plane_domain(BoundaryValues values) {
  BaseDomain d;
  d.shape = shape::HalfPlane{};
  d.contains = [](BasePoint p) { return p.x > 0; };
  d.boundary.push_back({SegmentArc{{0, 0}, {0, 1}, -inf, inf}, values});
  d.angular_breaks = {-pi / 2, pi / 2};
  return d;
}

BaseDomain polygon_domain(std::vector<BasePoint> v, std::vector<BoundaryValues> values) {
  if (v.size() < 3) throw InvalidArgument("polygon needs at least three vertices");
  if (values.size() != v.size()) throw InvalidArgument("one boundary tag per polygon edge");
  BaseDomain d;
  d.shape = shape::Polygon{v};
  d.contains = [v](BasePoint p) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const BasePoint a = v[i], b = v[(i + 1) % v.size()];
      if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) <= 0) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const BasePoint a = v[i], b = v[(i + 1) % v.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    d.boundary.push_back(
        {SegmentArc{a, {(b.x - a.x) / len, (b.y - a.y) / len}, 0, len}, values[i]});
  }
  return d;
}

BaseDomain ideal_polygon_domain(const SpaceParams& sp, int vertices, BoundaryValues values) {
  if (!(sp.kappa() < 0)) throw InvalidArgument("ideal polygons need kappa < 0");
  if (vertices < 3) throw InvalidArgument("ideal polygon needs at least three vertices");
  const double beta = pi / vertices;  // half the angle between consecutive vertices
  const double scale = 2 / sp.k();
  const double d = scale / std::cos(beta), rad = scale * std::tan(beta);
  std::vector<BasePoint> centers;
  BaseDomain out;
  out.shape = shape::IdealPolygon{vertices};
  for (int k = 0; k < vertices; ++k) {
    const double a = 2 * beta * k;
    centers.push_back({d * std::cos(a), d * std::sin(a)});
    const double half = pi / 2 - beta;
    out.boundary.push_back({CircleArc{centers.back(), rad, a + pi - half, a + pi + half}, values});
  }
  const double model = scale;
  out.contains = [centers, rad, model](BasePoint p) {
    if (p.x * p.x + p.y * p.y >= model * model) return false;
    for (const BasePoint& c : centers)
      if (std::hypot(p.x - c.x, p.y - c.y) <= rad) return false;
    return true;
  };
  return out;
}

// ---------------------------------------------------------------------------------------------
// Graph fields

GraphSurface::GraphSurface(const SpaceParams& s, BaseDomain d, std::function<double(BasePoint)> f,
                           std::function<Gradient(BasePoint)> g, std::function<Hessian(BasePoint)> h)
    : sp(s), domain(std::move(d)), u(std::move(f)), grad(std::move(g)), hess(std::move(h)) {
  if (!u) throw InvalidArgument("graph needs a height function");
  if (!domain.contains) throw InvalidArgument("domain needs a membership predicate");
}

Gradient GraphSurface::gradient(BasePoint p) const {
  if (grad) return grad(p);
  constexpr double h = 1e-6;
  return {(u({p.x + h, p.y}) - u({p.x - h, p.y})) / (2 * h),
          (u({p.x, p.y + h}) - u({p.x, p.y - h})) / (2 * h)};
}

Vec2 z_field(const SpaceParams& sp, BasePoint p) {
  require_in_model(sp, p);
  return {sp.tau() * p.y, -sp.tau() * p.x};
}

Vec2 metric_gradient(const SpaceParams& sp, BasePoint p, Gradient g) {
  const double l = lambda(sp, p);
  return {g.ux / l, g.uy / l};
}

GraphFields graph_fields(const SpaceParams& sp, BasePoint p, Gradient g) {
  GraphFields f;
  f.z = z_field(sp, p);
  f.grad_u = metric_gradient(sp, p, g);
  f.gu = {f.grad_u.e1 + f.z.e1, f.grad_u.e2 + f.z.e2};
  f.w = std::sqrt(1 + f.gu.e1 * f.gu.e1 + f.gu.e2 * f.gu.e2);
  f.nu = 1 / f.w;
  return f;
}

GraphFields graph_fields(const GraphSurface& g, BasePoint p) {
  return graph_fields(g.sp, p, g.gradient(p));
}

namespace {

// λ·(Gu/W) in frame components, i.e. the coordinate flux (P/W, Q/W).
std::pair<double, double> flux(const GraphSurface& g, BasePoint p) {
  const GraphFields f = graph_fields(g, p);
  const double l = lambda(g.sp, p);
  return {l * f.gu.e1 / f.w, l * f.gu.e2 / f.w};
}

double curvature_analytic(const GraphSurface& g, BasePoint p) {
  const SpaceParams& sp = g.sp;
  const double k = sp.kappa(), t = sp.tau();
  const double l = lambda(sp, p);
  const Gradient d = g.gradient(p);
  const Hessian h = g.hess(p);
  const double g1 = d.ux / l + t * p.y, g2 = d.uy / l - t * p.x;
  const double W = std::sqrt(1 + g1 * g1 + g2 * g2);
  const double g1x = h.uxx / l + 0.5 * k * p.x * d.ux;
  const double g1y = h.uxy / l + 0.5 * k * p.y * d.ux + t;
  const double g2x = h.uxy / l + 0.5 * k * p.x * d.uy - t;
  const double g2y = h.uyy / l + 0.5 * k * p.y * d.uy;
  const double Wx = (g1 * g1x + g2 * g2x) / W;
  const double Wy = (g1 * g1y + g2 * g2y) / W;
  const double lx = -0.5 * l * l * k * p.x, ly = -0.5 * l * l * k * p.y;
  const double P = d.ux + t * l * p.y, Q = d.uy - t * l * p.x;
  const double Px = h.uxx + t * lx * p.y, Qy = h.uyy - t * ly * p.x;
  const double div = Px / W - P * Wx / (W * W) + Qy / W - Q * Wy / (W * W);
  return 0.5 * div / (l * l);
}

double curvature_fd(const GraphSurface& g, BasePoint p) {
  constexpr double h = 1e-4;
  const double l = lambda(g.sp, p);
  const double dx = flux(g, {p.x + h, p.y}).first - flux(g, {p.x - h, p.y}).first;
  const double dy = flux(g, {p.x, p.y + h}).second - flux(g, {p.x, p.y - h}).second;
  return 0.5 * (dx + dy) / (2 * h) / (l * l);
}

}  // namespace

double mean_curvature(const GraphSurface& g, BasePoint p, CurvatureMethod method) {
  if (!g.domain.contains(p)) throw DomainError("mean curvature requested outside the domain");
  switch (method) {
    case CurvatureMethod::analytic:
      if (!g.hess || !g.grad) throw InvalidArgument("analytic curvature needs gradient and Hessian");
      return curvature_analytic(g, p);
    case CurvatureMethod::finite_difference: return curvature_fd(g, p);
    case CurvatureMethod::automatic:
      return (g.hess && g.grad) ? curvature_analytic(g, p) : curvature_fd(g, p);
  }
  return 0;
}

// ---------------------------------------------------------------------------------------------
// Areas

PolarRegion region_in_disk(const GraphSurface& g, double R, std::function<bool(BasePoint)> extra) {
  if (!(R > 0)) throw InvalidArgument("R must be > 0");
  PolarRegion r;
  r.max_radius = model_radius_of(g.sp, R);
  r.min_radius = std::min(g.domain.min_radius, r.max_radius);
  r.angular_breaks = g.domain.angular_breaks;
  auto in = g.domain.contains;
  if (extra)
    r.contains = [in, extra](BasePoint p) { return in(p) && extra(p); };
  else
    r.contains = in;
  return r;
}

QuadratureResult graph_area(const GraphSurface& g, const PolarRegion& region,
                            const QuadratureOptions& opts) {
  const QuadratureResult r =
      integrate_polar(g.sp, [&g](BasePoint p) { return graph_fields(g, p).w; }, region, opts);
  if (!r.converged)
    throw ConvergenceError("graph area quadrature did not reach the requested tolerance", r.value);
  return r;
}

HeightBound default_height_bound(const SpaceParams& sp) {
  return [sp](double R) { return ball_height_bound(sp, R); };
}

namespace {

struct ArcEval {
  BasePoint point, velocity;
};

ArcEval eval_arc(const BoundaryArc& a, double s) {
  return std::visit(overloaded{
                        [s](const SegmentArc& g) {
                          return ArcEval{{g.origin.x + s * g.direction.x,
                                          g.origin.y + s * g.direction.y},
                                         g.direction};
                        },
                        [s](const CircleArc& c) {
                          return ArcEval{{c.center.x + c.radius * std::cos(s),
                                          c.center.y + c.radius * std::sin(s)},
                                         {-c.radius * std::sin(s), c.radius * std::cos(s)}};
                        },
                    },
                    a.geometry);
}

std::pair<double, double> arc_range(const BoundaryArc& a) {
  return std::visit(overloaded{
                        [](const SegmentArc& g) { return std::pair{g.t0, g.t1}; },
                        [](const CircleArc& c) { return std::pair{c.angle0, c.angle1}; },
                    },
                    a.geometry);
}

// Parameter range of the arc inside the open model disk of radius rho; infinite segments are
// cut at the parameter where they certainly leave it.
std::vector<std::pair<double, double>> clip_arc(const BoundaryArc& a, double rho) {
  auto [s0, s1] = arc_range(a);
  if (const auto* g = std::get_if<SegmentArc>(&a.geometry)) {
    const double reach = std::hypot(g->origin.x, g->origin.y) + rho + 1;
    s0 = std::max(s0, -reach);
    s1 = std::min(s1, reach);
  }
  auto inside = [&](double s) {
    const BasePoint p = eval_arc(a, s).point;
    return p.x * p.x + p.y * p.y < rho * rho;
  };
  return find_segments(inside, s0, s1, 4096, 1e-14);
}

// ∫ f ds along the clipped arcs with the M²(κ) length element.
double arc_integral(const SpaceParams& sp, const BoundaryArc& a, double rho,
                    const std::function<double(BasePoint)>& f) {
  const GaussRule& rule = gauss_legendre(20);
  double total = 0;
  for (const auto& [lo, hi] : clip_arc(a, rho)) {
    constexpr int panels = 16;
    for (int p = 0; p < panels; ++p) {
      const double pa = lo + (hi - lo) * p / panels, pb = lo + (hi - lo) * (p + 1) / panels;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double s = 0.5 * (pa + pb) + 0.5 * (pb - pa) * rule.x[i];
        const ArcEval e = eval_arc(a, s);
        const double speed = lambda(sp, e.point) * std::hypot(e.velocity.x, e.velocity.y);
        total += 0.5 * (pb - pa) * rule.w[i] * speed * f(e.point);
      }
    }
  }
  return total;
}

AreaBoundTerms area_terms(const GraphSurface& g, double R, const HeightBound& h,
                          const QuadratureOptions& opts) {
  const SpaceParams& sp = g.sp;
  AreaBoundTerms t;
  t.height = h ? h(R) : ball_height_bound(sp, R);
  const PolarRegion region = region_in_disk(g, R);
  auto need = [](const QuadratureResult& q, const char* what) {
    if (!q.converged) throw ConvergenceError(std::string(what) + " did not converge", q.value);
    return q.value;
  };
  t.base_area = need(integrate_polar(sp, [](BasePoint) { return 1.0; }, region, opts), "area");
  t.z_integral = need(integrate_polar(sp, [&sp](BasePoint p) { return z_field(sp, p).norm(); },
                                      region, opts),
                      "integral of |Z|");
  // Θ(R): the part of the circle ∂D_R inside Ω.
  const double rho = region.max_radius;
  BoundaryArc circle{CircleArc{{0, 0}, rho, -pi, pi}, BoundaryValues::finite};
  const auto on_circle = [&](double s) {
    const ArcEval e = eval_arc(circle, s);
    return g.domain.contains(e.point);
  };
  double measure = 0;
  for (const auto& [lo, hi] : find_segments(on_circle, -pi, pi, 8192, 1e-14)) measure += hi - lo;
  t.theta_length = lambda(sp, BasePoint{rho, 0}) * rho * measure;

  for (const BoundaryArc& a : g.domain.boundary) {
    const double len = arc_integral(sp, a, rho, [](BasePoint) { return 1.0; });
    if (a.values == BoundaryValues::infinite) {
      t.lambda_length += len;
    } else {
      t.gamma_length += len;
      t.gamma_integral += arc_integral(sp, a, rho, [&g](BasePoint p) { return std::abs(g.u(p)); });
    }
  }
  return t;
}

}  // namespace

AreaBoundTerms lemma41_bound(const GraphSurface& g, double R, const HeightBound& h,
                             const QuadratureOptions& opts) {
  AreaBoundTerms t = area_terms(g, R, h, opts);
  t.total = t.base_area + t.z_integral + t.height * (t.theta_length + t.lambda_length) +
            t.gamma_integral;
  return t;
}

AreaBoundTerms lemma42_bound(const GraphSurface& g, double R, const HeightBound& h,
                             const QuadratureOptions& opts) {
  AreaBoundTerms t = area_terms(g, R, h, opts);
  t.total = t.base_area + t.z_integral +
            t.height * (t.theta_length + t.lambda_length + t.gamma_length);
  return t;
}

// ---------------------------------------------------------------------------------------------

FactorizationResidual factorization_identity_residual(const SpaceParams& sp, BasePoint p,
                                                      Gradient grad_u, Gradient grad_v) {
  const GraphFields fu = graph_fields(sp, p, grad_u), fv = graph_fields(sp, p, grad_v);
  // Upward unit normals (−Gw, 1)/W_w in the frame (E1, E2, E3).
  const double n1 = -fu.gu.e1 / fu.w + fv.gu.e1 / fv.w;
  const double n2 = -fu.gu.e2 / fu.w + fv.gu.e2 / fv.w;
  const double n3 = 1 / fu.w - 1 / fv.w;
  FactorizationResidual r;
  r.lhs = (fu.gu.e1 / fu.w - fv.gu.e1 / fv.w) * (fu.gu.e1 - fv.gu.e1) +
          (fu.gu.e2 / fu.w - fv.gu.e2 / fv.w) * (fu.gu.e2 - fv.gu.e2);
  r.rhs = 0.5 * (fu.w + fv.w) * (n1 * n1 + n2 * n2 + n3 * n3);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

Vec2 lee_dual_gradient(const GraphSurface& g, BasePoint p) {
  if (!g.sp.is_nil()) throw InvalidArgument("the Calabi-Lee pairing is set up for Nil3");
  const GraphFields f = graph_fields(g, p);
  return {-f.gu.e2 / f.w, f.gu.e1 / f.w};
}

double calabi_lee_residual(const GraphSurface& g, BasePoint p, Vec2 grad_v) {
  const double nv2 = grad_v.e1 * grad_v.e1 + grad_v.e2 * grad_v.e2;
  if (!(nv2 < 1)) throw HypothesisError("dual graph is not spacelike (|grad v| >= 1)");
  const GraphFields f = graph_fields(g, p);
  return std::abs((1 - nv2) * f.w * f.w - 1);
}

GradientHeightBounds gradient_height_bounds(const GraphSurface& g, const std::vector<double>& radii,
                                            int angles) {
  if (radii.empty()) throw InvalidArgument("need at least one radius");
  if (!std::is_sorted(radii.begin(), radii.end()))
    throw InvalidArgument("radii must be increasing");
  GradientHeightBounds out;
  std::vector<double> bs, cs;
  for (double r : radii) {
    double b = 0, c = 0;
    for (int i = 0; i < angles; ++i) {
      const double a = 2 * pi * (i + 0.5) / angles;
      const BasePoint p{r * std::cos(a), r * std::sin(a)};
      if (!in_model(g.sp, p) || !g.domain.contains(p)) continue;
      const double s = 1 + r * r;
      b = std::max(b, graph_fields(g, p).gu.norm() / s);
      c = std::max(c, std::abs(g.u(p)) / (s * std::sqrt(s)));
    }
    bs.push_back(b);
    cs.push_back(c);
  }
  out.B = *std::max_element(bs.begin(), bs.end());
  out.C = *std::max_element(cs.begin(), cs.end());
  const std::size_t half = std::max<std::size_t>(1, radii.size() / 2);
  out.B_inner = *std::max_element(bs.begin(), bs.begin() + half);
  out.C_inner = *std::max_element(cs.begin(), cs.begin() + half);
  if (radii.size() > 1) {
    const double b_prev = *std::max_element(bs.begin(), bs.end() - 1);
    const double c_prev = *std::max_element(cs.begin(), cs.end() - 1);
    out.growth_flagged = bs.back() > 1.01 * b_prev || cs.back() > 1.01 * c_prev;
  }
  return out;
}

}  // namespace ekt
