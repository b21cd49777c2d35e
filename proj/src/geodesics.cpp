#include "ekt/geodesics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

namespace ekt {

namespace {

constexpr double pi = std::numbers::pi;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

double sinc(double w) {
  if (std::abs(w) < 1e-4) return 1.0 - w * w / 6.0;
  return std::sin(w) / w;
}

// (u − sin u) / u³ without cancellation near 0.
double g_cubic(double u) {
  if (std::abs(u) < 0.1) {
    const double u2 = u * u;
    return 1.0 / 6.0 - u2 / 120.0 + u2 * u2 / 5040.0 - u2 * u2 * u2 / 362880.0 +
           u2 * u2 * u2 * u2 / 39916800.0;
  }
  return (u - std::sin(u)) / (u * u * u);
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

GeodesicDerivative geodesic_rhs(const SpaceParams& sp, const GeodesicState& s) {
  const double k = sp.kappa(), t = sp.tau();
  const double x = s.point.x, y = s.point.y;
  const double a1 = s.velocity.a1, a2 = s.velocity.a2, a3 = s.velocity.a3;
  GeodesicDerivative d;
  d.position = frame_to_coord(sp, s.point, s.velocity);
  d.velocity.a1 = -0.5 * k * x * a2 * a2 + 0.5 * k * y * a1 * a2 - 2.0 * t * a2 * a3;
  d.velocity.a2 = -0.5 * k * y * a1 * a1 + 0.5 * k * x * a1 * a2 + 2.0 * t * a1 * a3;
  d.velocity.a3 = 0.0;
  return d;
}

std::string family_name(const GeodesicFamily& f) {
  return std::visit(overloaded{
                        [](const family::Numeric&) { return std::string("numeric"); },
                        [](const family::NilClosed&) { return std::string("nil"); },
                        [](const family::Sl2Horizontal&) { return std::string("horizontal"); },
                        [](const family::Sl2Elliptic&) { return std::string("elliptic"); },
                        [](const family::Sl2Parabolic&) { return std::string("parabolic"); },
                        [](const family::Sl2Hyperbolic&) { return std::string("hyperbolic"); },
                        [](const family::Product&) { return std::string("product"); },
                    },
                    f);
}

// ---------------------------------------------------------------------------------------------
// Nil₃ closed form, rewritten so it stays smooth as cos φ → 0 and τ → 0.

CurvePoint nil_geodesic(double tau, double phi, double theta, double t) {
  check_finite(phi, "phi");
  check_finite(theta, "theta");
  check_finite(t, "t");
  if (tau < 0.0) throw InvalidArgument("tau must be >= 0");
  if (phi < 0.0 || phi > pi) throw InvalidArgument("phi must lie in [0, pi]");
  if (phi == pi / 2) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{c * t, s * t, 0.0}, {c, s, 0.0}};
  }
  const double c = std::cos(phi), s = std::sin(phi);
  const double w = tau * c * t;
  const double S = t * sinc(w);
  CurvePoint out;
  out.point.x = -s * S * std::sin(w + theta);
  out.point.y = s * S * std::cos(w + theta);
  out.point.z = c * t + 2.0 * s * s * g_cubic(2.0 * w) * tau * tau * c * t * t * t;
  const double sw = sinc(w);
  out.velocity.dx = -s * std::sin(2.0 * w + theta);
  out.velocity.dy = s * std::cos(2.0 * w + theta);
  out.velocity.dz = c + s * s * tau * tau * c * t * t * sw * sw;
  return out;
}

PointE nil_geodesic_closed(double tau, double phi, double theta, double t) {
  return nil_geodesic(tau, phi, theta, t).point;
}

PointE nil_multiply(double tau, const PointE& p, const PointE& q) {
  return {p.x + q.x, p.y + q.y, p.z + q.z + tau * (p.x * q.y - p.y * q.x)};
}

PointE nil_inverse(const PointE& p) { return {-p.x, -p.y, -p.z}; }

// ---------------------------------------------------------------------------------------------
// S̃L₂ families through the origin with initial direction in the (E2, E3) plane. Written
// generically so the velocity can be taken by complex-step differentiation.

namespace {

void validate_sl2_family(const SpaceParams& sp, const GeodesicFamily& f) {
  if (!(sp.kappa() < 0.0)) throw InvalidArgument("S~L2 families need kappa < 0");
  const double amax = 2.0 / sp.k();
  std::visit(overloaded{
                 [&](const family::Sl2Horizontal&) {},
                 [&](const family::Sl2Elliptic& e) {
                   if (sp.tau() == 0.0) throw InvalidArgument("elliptic family needs tau > 0");
                   if (!(e.a >= 0.0 && e.a < amax))
                     throw InvalidArgument("elliptic family needs 0 <= a < 2/sqrt(-kappa)");
                 },
                 [&](const family::Sl2Parabolic&) {
                   if (sp.tau() == 0.0) throw InvalidArgument("parabolic family needs tau > 0");
                 },
                 [&](const family::Sl2Hyperbolic& h) {
                   if (sp.tau() == 0.0) throw InvalidArgument("hyperbolic family needs tau > 0");
                   if (!(h.a > amax) || !std::isfinite(h.a))
                     throw InvalidArgument("hyperbolic family needs a > 2/sqrt(-kappa)");
                 },
                 [&](const auto&) { throw InvalidArgument("not an S~L2 closed-form family"); },
             },
             f);
}

FrameVector sl2_direction(const SpaceParams& sp, const GeodesicFamily& f) {
  const double k = sp.kappa(), tau = sp.tau();
  return std::visit(
      overloaded{
          [&](const family::Sl2Horizontal&) { return FrameVector{0, 1, 0}; },
          [&](const family::Sl2Elliptic& e) {
            const double a2 = e.a * e.a;
            const double D = std::sqrt((4.0 - k * a2) * (4.0 - k * a2) + 64.0 * a2 * tau * tau);
            return FrameVector{0, 8.0 * e.a * tau / D, (4.0 - k * a2) / D};
          },
          [&](const family::Sl2Parabolic&) {
            const double q = std::sqrt(4.0 * tau * tau - k);
            return FrameVector{0, 2.0 * tau / q, sp.k() / q};
          },
          [&](const family::Sl2Hyperbolic& h) {
            const double r = std::sqrt(1.0 + h.a * h.a * tau * tau);
            return FrameVector{0, h.a * tau / r, 1.0 / r};
          },
          [&](const auto&) -> FrameVector {
            throw InvalidArgument("not an S~L2 closed-form family");
          },
      },
      f);
}

}  // namespace

CurvePoint sl2_geodesic(const SpaceParams& sp, const GeodesicFamily& f, double t) {
  validate_sl2_family(sp, f);
  check_finite(t, "t");
  const auto p = sl2_point<double>(sp, f, t);
  constexpr double h = 1e-30;
  const auto pc = sl2_point<std::complex<double>>(sp, f, std::complex<double>(t, h));
  CurvePoint out;
  out.point = {p[0], p[1], p[2]};
  out.velocity = {pc[0].imag() / h, pc[1].imag() / h, pc[2].imag() / h};
  require_in_model(sp, out.point.base());
  return out;
}

PointE sl2_geodesic_closed(const SpaceParams& sp, const GeodesicFamily& f, double t) {
  return sl2_geodesic(sp, f, t).point;
}

CurvePoint product_geodesic(const SpaceParams& sp, const FrameVector& d, double t) {
  const double sb = std::hypot(d.a1, d.a2);
  CurvePoint out;
  out.point.z = d.a3 * t;
  out.velocity.dz = d.a3;
  if (sb == 0.0) return out;
  double rho, drho;
  if (sp.kappa() == 0.0) {
    rho = sb * t;
    drho = sb;
  } else {
    const double th = std::tanh(0.5 * sp.k() * sb * t);
    rho = (2.0 / sp.k()) * th;
    drho = sb * (1.0 - th * th);
  }
  const double ux = d.a1 / sb, uy = d.a2 / sb;
  out.point.x = rho * ux;
  out.point.y = rho * uy;
  out.velocity.dx = drho * ux;
  out.velocity.dy = drho * uy;
  return out;
}

// ---------------------------------------------------------------------------------------------

GeodesicSpec nil_spec(double tau, double phi, double theta, PointE start) {
  GeodesicSpec s;
  s.start = start;
  s.family = family::NilClosed{phi, theta};
  const CurvePoint c = nil_geodesic(tau, phi, theta, 0.0);
  // At the origin the frame and coordinate components agree.
  s.direction = {c.velocity.dx, c.velocity.dy, c.velocity.dz};
  return s;
}

GeodesicSpec sl2_spec(const SpaceParams& sp, const GeodesicFamily& f) {
  validate_sl2_family(sp, f);
  GeodesicSpec s;
  s.family = f;
  s.direction = sl2_direction(sp, f);
  return s;
}

GeodesicSpec product_spec(const SpaceParams& sp, const FrameVector& direction, PointE start) {
  GeodesicSpec s;
  s.start = start;
  s.direction = direction;
  s.family = family::Product{};
  validate(sp, s);
  return s;
}

bool has_closed_form(const GeodesicSpec& spec) {
  return !std::holds_alternative<family::Numeric>(spec.family);
}

void validate(const SpaceParams& sp, const GeodesicSpec& spec) {
  require_in_model(sp, spec.start.base());
  check_finite(spec.start.z, "start.z");
  if (std::abs(spec.direction.norm() - 1.0) > 1e-10)
    throw InvalidArgument("geodesic direction must have unit norm");
  const bool at_origin = spec.start.x == 0.0 && spec.start.y == 0.0 && spec.start.z == 0.0;
  std::visit(overloaded{
                 [&](const family::Numeric&) {},
                 [&](const family::NilClosed& n) {
                   if (sp.kappa() != 0.0) throw InvalidArgument("Nil family needs kappa = 0");
                   if (!(n.phi >= 0.0 && n.phi <= pi))
                     throw InvalidArgument("phi must lie in [0, pi]");
                   check_finite(n.theta, "theta");
                   const CurvePoint c = nil_geodesic(sp.tau(), n.phi, n.theta, 0.0);
                   const FrameVector d{c.velocity.dx, c.velocity.dy, c.velocity.dz};
                   if ((d - spec.direction).norm() > 1e-10)
                     throw InvalidArgument("direction does not match the (phi, theta) family");
                 },
                 [&](const family::Product&) {
                   if (sp.tau() != 0.0) throw InvalidArgument("product family needs tau = 0");
                 },
                 [&](const auto&) {
                   validate_sl2_family(sp, spec.family);
                   if (!at_origin)
                     throw InvalidArgument("S~L2 closed-form families start at the origin");
                   if ((sl2_direction(sp, spec.family) - spec.direction).norm() > 1e-10)
                     throw InvalidArgument("direction does not match the S~L2 family");
                 },
             },
             spec.family);
}

GeodesicSample closed_form_sample(const SpaceParams& sp, const GeodesicSpec& spec, double t) {
  CurvePoint c;
  PointE p;
  if (const auto* n = std::get_if<family::NilClosed>(&spec.family)) {
    c = nil_geodesic(sp.tau(), n->phi, n->theta, t);
    // Left translation is an isometry preserving frame components.
    p = nil_multiply(sp.tau(), spec.start, c.point);
    const FrameVector a = coord_to_frame(sp, c.point, c.velocity);
    return {t, p, a};
  }
  if (std::holds_alternative<family::Product>(spec.family)) {
    c = product_geodesic(sp, spec.direction, t);
    const BasePoint b = base_translate(sp, spec.start.base(), c.point.base());
    const BasePoint v = base_translate_differential(sp, spec.start.base(), c.point.base(),
                                                    {c.velocity.dx, c.velocity.dy});
    p = {b.x, b.y, spec.start.z + c.point.z};
    return {t, p, coord_to_frame(sp, p, {v.x, v.y, c.velocity.dz})};
  }
  if (std::holds_alternative<family::Numeric>(spec.family))
    throw InvalidArgument("numeric family has no closed form");
  c = sl2_geodesic(sp, spec.family, t);
  return {t, c.point, coord_to_frame(sp, c.point, c.velocity)};
}

// ---------------------------------------------------------------------------------------------

std::vector<GeodesicSample> integrate_geodesic(const SpaceParams& sp, const GeodesicSpec& spec,
                                               double t_end, double tol, std::size_t n_samples) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 6>;
  validate(sp, spec);
  if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be > 0");
  if (n_samples < 2) throw InvalidArgument("need at least two samples");

  auto system = [&sp](const State& y, State& dy, double) {
    const GeodesicDerivative d = geodesic_rhs(sp, {{y[0], y[1], y[2]}, {y[3], y[4], y[5]}});
    dy = {d.position.dx, d.position.dy, d.position.dz,
          d.velocity.a1, d.velocity.a2, d.velocity.a3};
  };

  std::vector<double> times(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i)
    times[i] = t_end * static_cast<double>(i) / static_cast<double>(n_samples - 1);
  times.back() = t_end;

  std::vector<GeodesicSample> out;
  out.reserve(n_samples);
  auto observer = [&out](const State& y, double t) {
    out.push_back({t, {y[0], y[1], y[2]}, {y[3], y[4], y[5]}});
  };

  State y0{spec.start.x, spec.start.y, spec.start.z,
           spec.direction.a1, spec.direction.a2, spec.direction.a3};
  auto stepper = odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<State>());
  const double dt0 = std::min(1e-3, t_end / 100.0);
  auto where = [&out]() {
    if (out.empty()) return std::string(" near t = 0");
    const auto& s = out.back();
    return " after t = " + std::to_string(s.t) + " at (" + std::to_string(s.point.x) + ", " +
           std::to_string(s.point.y) + ", " + std::to_string(s.point.z) + ")";
  };
  try {
    odeint::integrate_times(stepper, system, y0, times.begin(), times.end(), dt0, observer,
                            odeint::max_step_checker(1000000));
  } catch (const DomainError& e) {
    throw DomainError(std::string("geodesic left the model") + where() + ": " + e.what());
  } catch (const odeint::odeint_error& e) {
    throw ConvergenceError(std::string("step-size control failed") + where() + ": " + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Ball heights.

double nil_max_height(double tau, double R) {
  if (!(R > 0.0)) throw InvalidArgument("R must be > 0");
  if (tau < 0.0) throw InvalidArgument("tau must be >= 0");
  if (2.0 * tau * R <= pi) return R;
  return (pi * pi + 4.0 * tau * tau * R * R) / (4.0 * tau * pi);
}

namespace {

void check_zeta_args(double tau, double R, double s) {
  if (!(tau > 0.0) || !(R > 0.0)) throw InvalidArgument("zeta_R needs tau > 0 and R > 0");
  const double q = 2.0 * tau * R;
  if (!(s > 0.0) || s > q * (1.0 + 1e-12)) throw InvalidArgument("s must lie in (0, 2 tau R]");
}

double zeta_numerator_prime(double q, double s) {
  return s * (s - q) * (s + q) * (1.0 + std::cos(s)) + 2.0 * q * q * std::sin(s);
}

}  // namespace

double zeta_r(double tau, double R, double s) {
  check_zeta_args(tau, R, s);
  const double q = 2.0 * tau * R;
  return (s * (s * s + q * q) + (s - q) * (s + q) * std::sin(s)) / (4.0 * tau * s * s);
}

double zeta_r_prime(double tau, double R, double s) {
  check_zeta_args(tau, R, s);
  const double q = 2.0 * tau * R;
  return zeta_numerator_prime(q, s) / (4.0 * tau * s * s * s);
}

std::vector<double> zeta_r_critical_points(double tau, double R, std::size_t scan) {
  check_zeta_args(tau, R, 2.0 * tau * R);
  if (scan < 16) scan = 16;
  const double q = 2.0 * tau * R;
  auto f = [q](double s) { return zeta_numerator_prime(q, s); };
  std::vector<double> roots;
  double a = q * 1e-6, fa = f(a);
  for (std::size_t i = 1; i <= scan; ++i) {
    const double b = q * static_cast<double>(i) / static_cast<double>(scan);
    const double fb = f(b);
    if (fb == 0.0) {
      roots.push_back(b);
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      std::uintmax_t iters = 200;
      auto r = boost::math::tools::toms748_solve(
          f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iters);
      roots.push_back(0.5 * (r.first + r.second));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

double sl2_max_height_bound(const SpaceParams& sp, double R) {
  if (!(sp.kappa() < 0.0)) throw InvalidArgument("sl2_max_height_bound needs kappa < 0");
  if (!(R > 0.0)) throw InvalidArgument("R must be > 0");
  const double k = sp.kappa(), t = sp.tau();
  if (t == 0.0) return R;
  const double elliptic = (1.0 - (8.0 * t * t - k) / k) * R - 2.0 * pi * t / k;
  const double other = std::sqrt(4.0 * t * t - k) / sp.k() * R - 2.0 * pi * t / k;
  return std::max(elliptic, other);
}

// ---------------------------------------------------------------------------------------------
// Distances.

double base_distance(const SpaceParams& sp, BasePoint p, BasePoint q) {
  require_in_model(sp, p);
  require_in_model(sp, q);
  if (sp.kappa() == 0.0) return std::hypot(p.x - q.x, p.y - q.y);
  const std::complex<double> u = 0.5 * sp.k() * std::complex<double>(p.x, p.y);
  const std::complex<double> v = 0.5 * sp.k() * std::complex<double>(q.x, q.y);
  const double r = std::abs(u - v) / std::abs(1.0 - std::conj(v) * u);
  return (2.0 / sp.k()) * std::atanh(std::min(r, 1.0));
}

namespace {

// μ(w) = (2w − sin 2w) / (4 sin² w).
double mu(double w) {
  if (w < 1e-3) return (w / 3.0) * (1.0 + 2.0 * w * w / 15.0);
  const double s = std::sin(w);
  return (2.0 * w - std::sin(2.0 * w)) / (4.0 * s * s);
}

// Distance from the origin to (0, 0, h) in Nil₃(τ).
double nil_vertical(double tau, double h) {
  h = std::abs(h);
  if (tau == 0.0 || tau * h < pi) return h;
  return std::sqrt(pi * (2.0 * tau * h - pi)) / tau;
}

double nil_length(double tau, double rho, double w) {
  const double s = std::sin(w);
  return std::sqrt(w * w / (tau * tau) + rho * rho * (w * w) / (s * s));
}

struct NilProblem {
  double tau, rho, az;
  double operator()(double w) const { return w + tau * tau * rho * rho * mu(w) - tau * az; }
};

// Root on the minimizing branch w ∈ (0, π).
double nil_branch0(const NilProblem& F, double tol) {
  double lo = 0.0, flo = F(lo);
  double delta = 1e-2, hi = pi - delta, fhi = F(hi);
  while (fhi <= 0.0) {
    lo = hi;
    flo = fhi;
    delta *= 0.01;
    if (delta < 1e-15) throw ConvergenceError("minimizing branch not bracketed");
    hi = pi - delta;
    fhi = F(hi);
  }
  std::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(
      F, lo, hi, flo, fhi,
      [tol](double a, double b) { return std::abs(b - a) <= tol * std::max(1.0, a); }, iters);
  if (iters >= 200) throw ConvergenceError("distance root solve did not converge");
  return 0.5 * (r.first + r.second);
}

double nil_origin_distance(double tau, const PointE& p, double tol, int extra_branches,
                           int* branches) {
  const double rho = std::hypot(p.x, p.y);
  const double az = std::abs(p.z);
  if (branches) *branches = 1;
  if (tau == 0.0) return std::hypot(rho, az);
  if (az == 0.0) return rho;
  if (tau * rho < 1e-9) return nil_vertical(tau, az);
  const NilProblem F{tau, rho, az};
  double best = nil_length(tau, rho, nil_branch0(F, tol));
  for (int kb = 1; kb <= extra_branches; ++kb) {
    const double base = kb * pi;
    constexpr int scan = 256;
    double a = base + pi * 0.5 / scan, fa = F(a);
    for (int j = 1; j < scan; ++j) {
      const double b = base + pi * (j + 0.5) / scan, fb = F(b);
      if ((fa < 0.0) != (fb < 0.0)) {
        std::uintmax_t iters = 200;
        auto r = boost::math::tools::toms748_solve(
            F, a, b, fa, fb,
            [tol](double x, double y) { return std::abs(y - x) <= tol * std::max(1.0, x); },
            iters);
        best = std::min(best, nil_length(tau, rho, 0.5 * (r.first + r.second)));
        if (branches) ++*branches;
      }
      a = b;
      fa = fb;
    }
  }
  return best;
}

// Integral of τλ(x dy − y dx) along the base geodesic from p to q.
double horizontal_lift_rise(const SpaceParams& sp, BasePoint p, BasePoint q) {
  if (sp.tau() == 0.0) return 0.0;
  const BasePoint qq = base_translate_inverse(sp, p, q);
  static constexpr std::array<double, 10> xs = {
      0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
      0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
      0.9639719272779138, 0.9931285991850949};
  static constexpr std::array<double, 10> ws = {
      0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
      0.1181945319615184, 0.1019301198172404, 0.0832767121212748, 0.0626720483341091,
      0.0406014525185332, 0.0176140071391521};
  // Segment from the origin to qq in model coordinates, parametrized by s ∈ [0, 1].
  auto integrand = [&](double s) {
    const BasePoint c{s * qq.x, s * qq.y};
    const BasePoint pt = base_translate(sp, p, c);
    const BasePoint v = base_translate_differential(sp, p, c, qq);
    return lambda(sp, pt) * (pt.x * v.y - pt.y * v.x);
  };
  double sum = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sum += ws[i] * (integrand(0.5 * (1.0 + xs[i])) + integrand(0.5 * (1.0 - xs[i])));
  }
  return sp.tau() * 0.5 * sum;
}

}  // namespace

double nil_distance_from_origin(double tau, const PointE& p, double tol) {
  return nil_origin_distance(tau, p, tol, 0, nullptr);
}

DistanceResult distance(const SpaceParams& sp, const PointE& p, const PointE& q, double tol) {
  require_in_model(sp, p.base());
  require_in_model(sp, q.base());
  if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");
  DistanceResult r;
  if (sp.kappa() == 0.0) {
    const PointE d = nil_multiply(sp.tau(), nil_inverse(p), q);
    try {
      r.value = nil_origin_distance(sp.tau(), d, tol, 2, &r.branches);
    } catch (const ConvergenceError&) {
      const double bound = std::hypot(d.x, d.y) + nil_vertical(sp.tau(), d.z);
      throw ConvergenceError("Nil distance did not converge", bound);
    }
    r.lower = r.upper = r.value;
    return r;
  }
  const double dh = base_distance(sp, p.base(), q.base());
  if (sp.tau() == 0.0) {
    r.value = r.lower = r.upper = std::hypot(dh, q.z - p.z);
    return r;
  }
  // S̃L₂: the submersion does not increase length (lower bound); the horizontal lift of the
  // base geodesic followed by a fiber segment gives an upper bound.
  const double rise = horizontal_lift_rise(sp, p.base(), q.base());
  const double residual = std::abs(q.z - (p.z + rise));
  r.lower = dh;
  r.upper = dh + residual;
  r.exact = residual <= 1e-14 * std::max(1.0, std::abs(q.z) + std::abs(p.z));
  if (r.exact) r.upper = r.lower;
  r.value = r.upper;
  return r;
}

double delta_alpha(double alpha, const PointE& p) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be > 0");
  return std::max(std::hypot(p.x, p.y), std::sqrt(std::abs(p.z)) / alpha);
}

}  // namespace ekt
