#include "ekt/core.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace ekt {

SpaceParams::SpaceParams(double kappa, double tau) : kappa_(kappa), tau_(tau), k_(0.0) {
  if (!std::isfinite(kappa) || !std::isfinite(tau))
    throw InvalidArgument("kappa and tau must be finite");
  if (kappa > 0.0) throw InvalidArgument("kappa must be <= 0, got " + std::to_string(kappa));
  if (tau < 0.0) throw InvalidArgument("tau must be >= 0, got " + std::to_string(tau));
  k_ = std::sqrt(-kappa_);
}

double SpaceParams::model_radius() const {
  return kappa_ == 0.0 ? std::numeric_limits<double>::infinity() : 2.0 / k_;
}

double FrameVector::norm() const { return std::sqrt(norm2()); }

FrameVector operator+(const FrameVector& u, const FrameVector& v) {
  return {u.a1 + v.a1, u.a2 + v.a2, u.a3 + v.a3};
}
FrameVector operator-(const FrameVector& u, const FrameVector& v) {
  return {u.a1 - v.a1, u.a2 - v.a2, u.a3 - v.a3};
}
FrameVector operator*(double s, const FrameVector& v) { return {s * v.a1, s * v.a2, s * v.a3}; }
double dot(const FrameVector& u, const FrameVector& v) {
  return u.a1 * v.a1 + u.a2 * v.a2 + u.a3 * v.a3;
}

bool in_model(const SpaceParams& sp, BasePoint p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  return 1.0 + 0.25 * sp.kappa() * (p.x * p.x + p.y * p.y) > 0.0;
}

void require_in_model(const SpaceParams& sp, BasePoint p) {
  if (!in_model(sp, p))
    throw DomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                      ") outside the model region");
}

double lambda(const SpaceParams& sp, BasePoint p) {
  require_in_model(sp, p);
  return 1.0 / (1.0 + 0.25 * sp.kappa() * (p.x * p.x + p.y * p.y));
}

FrameVector coord_to_frame(const SpaceParams& sp, const PointE& p, const CoordVector& v) {
  const double l = lambda(sp, p);
  const double t = sp.tau();
  return {l * v.dx, l * v.dy, v.dz + t * l * (p.y * v.dx - p.x * v.dy)};
}

CoordVector frame_to_coord(const SpaceParams& sp, const PointE& p, const FrameVector& a) {
  const double l = lambda(sp, p);
  const double t = sp.tau();
  return {a.a1 / l, a.a2 / l, a.a3 - t * p.y * a.a1 + t * p.x * a.a2};
}

std::array<std::array<double, 3>, 3> coordinate_metric(const SpaceParams& sp, const PointE& p) {
  // Coframe: λdx, λdy, dz + τλ(y dx − x dy).
  const double l = lambda(sp, p);
  const double t = sp.tau();
  const double cx = t * l * p.y, cy = -t * l * p.x;
  std::array<std::array<double, 3>, 3> g{};
  g[0][0] = l * l + cx * cx;
  g[1][1] = l * l + cy * cy;
  g[2][2] = 1.0;
  g[0][1] = g[1][0] = cx * cy;
  g[0][2] = g[2][0] = cx;
  g[1][2] = g[2][1] = cy;
  return g;
}

FrameVector connection(const SpaceParams& sp, const PointE& p, int i, int j) {
  require_in_model(sp, p.base());
  const double hk = 0.5 * sp.kappa();
  const double t = sp.tau();
  switch (3 * i + j) {
    case 0: return {0, hk * p.y, 0};
    case 1: return {-hk * p.y, 0, t};
    case 2: return {0, -t, 0};
    case 3: return {0, -hk * p.x, -t};
    case 4: return {hk * p.x, 0, 0};
    case 5: return {t, 0, 0};
    case 6: return {0, -t, 0};
    case 7: return {t, 0, 0};
    case 8: return {0, 0, 0};
  }
  throw InvalidArgument("connection indices must lie in 0..2");
}

namespace {

FrameVector directional(const SpaceParams& sp, const FrameField& Y, const PointE& p,
                        const CoordVector& v, double h) {
  if (Y.derivative) return Y.derivative(p, v);
  const PointE pp{p.x + h * v.dx, p.y + h * v.dy, p.z + h * v.dz};
  const PointE pm{p.x - h * v.dx, p.y - h * v.dy, p.z - h * v.dz};
  require_in_model(sp, pp.base());
  require_in_model(sp, pm.base());
  return (0.5 / h) * (Y.value(pp) - Y.value(pm));
}

}  // namespace

FrameVector covariant_derivative(const SpaceParams& sp, const FrameField& X, const FrameField& Y,
                                 const PointE& p, double fd_step) {
  if (!X.value || !Y.value) throw InvalidArgument("frame fields need a value callable");
  const FrameVector x = X.value(p);
  const FrameVector y = Y.value(p);
  FrameVector out = directional(sp, Y, p, frame_to_coord(sp, p, x), fd_step);
  const double xs[3] = {x.a1, x.a2, x.a3};
  const double ys[3] = {y.a1, y.a2, y.a3};
  for (int i = 0; i < 3; ++i) {
    if (xs[i] == 0.0) continue;
    for (int j = 0; j < 3; ++j) {
      if (ys[j] == 0.0) continue;
      out = out + (xs[i] * ys[j]) * connection(sp, p, i, j);
    }
  }
  return out;
}

double volume_form(const SpaceParams& sp, const PointE& p) {
  const double l = lambda(sp, p);
  return l * l;
}

}  // namespace ekt

namespace ekt {

namespace {

using cplx = std::complex<double>;

cplx to_disk(const SpaceParams& sp, BasePoint p) { return 0.5 * sp.k() * cplx(p.x, p.y); }
BasePoint from_disk(const SpaceParams& sp, cplx u) {
  const cplx p = (2.0 / sp.k()) * u;
  return {p.real(), p.imag()};
}

}  // namespace

BasePoint base_translate(const SpaceParams& sp, BasePoint c, BasePoint p) {
  if (sp.kappa() == 0.0) return {p.x + c.x, p.y + c.y};
  require_in_model(sp, c);
  require_in_model(sp, p);
  const cplx a = to_disk(sp, c), u = to_disk(sp, p);
  return from_disk(sp, (u + a) / (1.0 + std::conj(a) * u));
}

BasePoint base_translate_inverse(const SpaceParams& sp, BasePoint c, BasePoint p) {
  if (sp.kappa() == 0.0) return {p.x - c.x, p.y - c.y};
  require_in_model(sp, c);
  require_in_model(sp, p);
  const cplx a = to_disk(sp, c), u = to_disk(sp, p);
  return from_disk(sp, (u - a) / (1.0 - std::conj(a) * u));
}

BasePoint base_translate_differential(const SpaceParams& sp, BasePoint c, BasePoint p,
                                      BasePoint v) {
  if (sp.kappa() == 0.0) return v;
  const cplx a = to_disk(sp, c), u = to_disk(sp, p);
  const cplx d = (1.0 - std::norm(a)) / ((1.0 + std::conj(a) * u) * (1.0 + std::conj(a) * u));
  const cplx w = d * cplx(v.x, v.y);
  return {w.real(), w.imag()};
}

}  // namespace ekt
