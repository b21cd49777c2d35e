#include "ekt/surfaces.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

#include "ekt/balls.hpp"
#include "ekt/errors.hpp"
#include "ekt/quadrature.hpp"

namespace ekt {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

template <class F>
double gk(F f, double a, double b, double tol) {
  double err = 0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, tol,
                                                                                 &err);
  if (!std::isfinite(v) || err > std::max(1e3 * tol * std::abs(v), 1e-300))
    throw ConvergenceError("quadrature did not converge", v);
  return v;
}

void require_nil_like(const SpaceParams& sp, const char* what) {
  if (sp.kappa() != 0) throw InvalidArgument(std::string(what) + " is defined for kappa = 0");
}
}  // namespace

ExampleSurface umbrella(const SpaceParams& sp) {
  GraphSurface g(
      sp, full_plane(), [](BasePoint) { return 0.0; }, [](BasePoint) { return Gradient{}; },
      [](BasePoint) { return Hessian{}; });
  ExampleSurface e{"umbrella", g, {}, true, true, false};
  const double k = sp.kappa(), t = sp.tau();
  if (k == 0) {
    e.closed_forms["area"] = [t](double R) {
      if (t == 0) return pi * R * R;
      return 2 * pi / (3 * t * t) * std::expm1(1.5 * std::log1p(t * t * R * R));
    };
  } else {
    const double kk = std::sqrt(-k);
    e.closed_forms["area"] = [t, kk](double R) {
      if (t == 0) return 4 * pi * std::pow(std::sinh(kk * R / 2), 2) / (kk * kk);
      // Geodesic polar coordinates: r = (2/k) tanh(ks/2), dA = sinh(ks)/k ds dθ.
      return 2 * pi * gk(
                          [&](double s) {
                            const double r = 2 / kk * std::tanh(0.5 * kk * s);
                            return std::sqrt(1 + t * t * r * r) * std::sinh(kk * s) / kk;
                          },
                          0, R, 1e-13);
    };
    e.closed_forms["leading"] = [k, t, kk](double R) {
      return pi * std::sqrt(4 * t * t - k) / (-k * kk) * std::exp(kk * R);
    };
  }
  return e;
}

ExampleSurface affine_plane(double tau, double a, double b) {
  const SpaceParams sp(0, tau);
  GraphSurface g(
      sp, full_plane(), [a, b](BasePoint p) { return a * p.x + b * p.y; },
      [a, b](BasePoint) { return Gradient{a, b}; }, [](BasePoint) { return Hessian{}; });
  ExampleSurface e{"plane", g, {}, true, a == 0 && b == 0, false};
  if (a == 0 && b == 0) e.closed_forms = umbrella(sp).closed_forms;
  return e;
}

ExampleSurface fmp_surface(double tau, double theta) {
  if (!(tau > 0)) throw InvalidArgument("f_theta needs tau > 0");
  const SpaceParams sp(0, tau);
  const double sh = std::sinh(theta);
  auto u = [tau, sh](BasePoint p) {
    const double s = std::sqrt(1 + 4 * tau * tau * p.y * p.y);
    return tau * p.x * p.y + sh / (4 * tau) * (2 * tau * p.y * s + std::asinh(2 * tau * p.y));
  };
  auto grad = [tau, sh](BasePoint p) {
    const double s = std::sqrt(1 + 4 * tau * tau * p.y * p.y);
    return Gradient{tau * p.y, tau * p.x + sh * s};
  };
  auto hess = [tau, sh](BasePoint p) {
    const double s = std::sqrt(1 + 4 * tau * tau * p.y * p.y);
    return Hessian{0, tau, sh * 4 * tau * tau * p.y / s};
  };
  ExampleSurface e{"fmp", GraphSurface(sp, full_plane(), u, grad, hess), {}, true, false, false};
  e.closed_forms["intrinsic_lower"] = [tau](double R) {
    const double s = std::sqrt(1 + 4 * tau * tau * R * R);
    return (1 + (2 * tau * tau * R * R - 1) * s + 3 * tau * R * std::asinh(2 * tau * R)) /
           (3 * tau * tau);
  };
  return e;
}

// ---------------------------------------------------------------------------------------------
// Catenoids

double catenoid_height(double tau, double E, double r, double tol) {
  if (!(E > 0)) throw InvalidArgument("catenoid needs E > 0");
  if (r < E * (1 - 1e-12)) throw DomainError("catenoid height requested inside the neck");
  if (r <= E) return 0;  // points of the neck circle up to rounding
  // s = E cosh w removes the 1/√(s − E) singularity.
  const double top = std::acosh(r / E);
  const double te = tau * E;
  auto f = [E, te](double w) {
    const double c = std::cosh(w);
    return E * std::sqrt(1 + te * te * c * c);
  };
  if (top < 0.1) {
    // The adaptive error estimate is unreliable on very short intervals; one Gauss-Legendre
    // panel is exact to rounding there.
    const GaussRule& rule = gauss_legendre(20);
    double v = 0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) v += rule.w[i] * f(0.5 * top * (rule.x[i] + 1));
    return 0.5 * top * v;
  }
  return gk(f, 0, top, tol);
}

double catenoid_slope(double tau, double E, double r) {
  if (!(r > E)) throw DomainError("catenoid slope needs r > E");
  return E * std::sqrt(1 + tau * tau * r * r) / std::sqrt((r - E) * (r + E));
}

ExampleSurface catenoid(double tau, double E, double r_max, double tol) {
  if (!(E > 0)) throw InvalidArgument("catenoid needs E > 0");
  if (!(r_max > E)) throw InvalidArgument("catenoid needs r_max > E");
  const SpaceParams sp(0, tau);
  auto u = [tau, E, tol](BasePoint p) { return catenoid_height(tau, E, std::hypot(p.x, p.y), tol); };
  auto grad = [tau, E](BasePoint p) {
    const double r = std::hypot(p.x, p.y);
    const double d = catenoid_slope(tau, E, r) / r;
    return Gradient{d * p.x, d * p.y};
  };
  auto hess = [tau, E](BasePoint p) {
    const double r2 = p.x * p.x + p.y * p.y, r = std::sqrt(r2);
    const double h1 = catenoid_slope(tau, E, r);
    const double q = (r - E) * (r + E);
    const double h2 = -E * r * (1 + tau * tau * E * E) / (std::sqrt(1 + tau * tau * r2) * q *
                                                           std::sqrt(q));
    return Hessian{h2 * p.x * p.x / r2 + h1 * p.y * p.y / (r2 * r),
                   (h2 - h1 / r) * p.x * p.y / r2,
                   h2 * p.y * p.y / r2 + h1 * p.x * p.x / (r2 * r)};
  };
  ExampleSurface e{"catenoid", GraphSurface(sp, annulus_domain(E, r_max), u, grad, hess), {}, true,
                   false, true};
  e.closed_forms["height"] = [tau, E, tol](double r) { return catenoid_height(tau, E, r, tol); };
  return e;
}

double CatenoidProfile::first_integral_drift() const {
  double m = 0;
  for (const ProfileSample& s : samples)
    m = std::max(m, std::abs(s.r * std::cos(s.alpha) + H * s.r * s.r - E));
  return m;
}

CatenoidProfile cmc_profile(double tau, double H, const ProfileSample& init, double t_end,
                            double tol, std::size_t n) {
  if (!(init.r > 0)) throw InvalidArgument("profile needs r > 0");
  if (!(t_end > init.t)) throw InvalidArgument("t_end must exceed the initial arclength");
  if (n < 2) throw InvalidArgument("need at least two samples");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be > 0");
  using State = std::array<double, 3>;  // h, r, α
  auto rhs = [tau, H](const State& s, State& d, double) {
    const double r = s[1];
    if (!(r > 0)) throw DomainError("profile reached the axis");
    const double q = std::sqrt(1 + tau * tau * r * r);
    d[0] = std::cos(s[2]);
    d[1] = std::sin(s[2]) / q;
    d[2] = (std::cos(s[2]) + 2 * H * r) / (r * q);
  };
  CatenoidProfile out;
  out.tau = tau;
  out.H = H;
  out.E = init.r * std::cos(init.alpha) + H * init.r * init.r;
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i)
    times[i] = init.t + (t_end - init.t) * static_cast<double>(i) / static_cast<double>(n - 1);
  State s{init.h, init.r, init.alpha};
  namespace ode = boost::numeric::odeint;
  try {
    ode::integrate_times(ode::make_dense_output(tol, tol, ode::runge_kutta_dopri5<State>()), rhs, s,
                         times.begin(), times.end(), 1e-3 * (t_end - init.t),
                         [&out](const State& x, double t) {
                           out.samples.push_back({t, x[0], x[1], x[2]});
                         },
                         ode::max_step_checker(1000000));
  } catch (const ode::step_adjustment_error& e) {
    throw ConvergenceError(std::string("profile integration failed: ") + e.what());
  } catch (const ode::no_progress_error& e) {
    throw ConvergenceError(std::string("profile integration failed: ") + e.what());
  }
  return out;
}

CatenoidProfile catenoid_profile(double tau, double E, double t_end, double tol, std::size_t n) {
  if (!(E > 0)) throw InvalidArgument("catenoid needs E > 0");
  return cmc_profile(tau, 0, ProfileSample{0, 0, E, 0}, t_end, tol, n);
}

// ---------------------------------------------------------------------------------------------
// Ideal polygons

double ideal_polygon_area(double kappa, int n, double H) {
  if (n < 2) throw InvalidArgument("ideal polygon needs n >= 2");
  if (!(4 * H * H + kappa < 0)) throw InvalidArgument("ideal polygon area needs 4H^2 + kappa < 0");
  return 2 * (n - 1) * pi / (-kappa - 4 * H * H);
}

double ideal_polygon_area_numeric(double kappa, int n) {
  if (n < 2) throw InvalidArgument("ideal polygon needs n >= 2");
  if (!(kappa < 0)) throw InvalidArgument("ideal polygons need kappa < 0");
  // Unit disk model of curvature −1. The edge facing direction 0 lies on the circle of center
  // sec β and radius tan β, β = π/(2n); along the ray at angle β − δ it sits at Euclidean radius
  // s = 1/(1 + q + √(q(2+q))) with q = tan β sin δ − 2 sin²(δ/2). The sector integrand is
  // ∫_0^s 4ρ/(1−ρ²)² dρ = 2s²/(1−s²).
  const double beta = pi / (2 * n);
  const double tb = std::tan(beta);
  auto integrand = [tb](double delta) {
    const double sd = std::sin(delta / 2);
    const double q = tb * std::sin(delta) - 2 * sd * sd;
    const double root = std::sqrt(q * (2 + q));
    const double den = 1 + q + root;
    const double s = 1 / den;
    const double one_minus = (q + root) / den;
    return 2 * s * s / (one_minus * (1 + s));
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  // The sector is symmetric about direction 0.
  const double half = ts.integrate(integrand, 0.0, beta, 1e-14);
  return 2 * n * 2 * half / (-kappa);
}

// ---------------------------------------------------------------------------------------------

std::vector<std::string> example_names() {
  return {"umbrella", "plane", "fmp", "catenoid", "ideal-polygon"};
}

ExampleSurface example_by_name(const std::string& name, const SpaceParams& sp,
                               const std::map<std::string, double>& params) {
  auto take = [&params](std::initializer_list<std::pair<const char*, double>> known) {
    std::map<std::string, double> out;
    for (const auto& [k, v] : known) out[k] = v;
    for (const auto& [k, v] : params) {
      if (!out.count(k)) throw InvalidArgument("unknown example parameter '" + k + "'");
      out[k] = v;
    }
    return out;
  };
  if (name == "umbrella") {
    take({});
    return umbrella(sp);
  }
  if (name == "plane") {
    require_nil_like(sp, "plane");
    const auto p = take({{"a", 1.0}, {"b", 0.0}});
    return affine_plane(sp.tau(), p.at("a"), p.at("b"));
  }
  if (name == "fmp") {
    require_nil_like(sp, "fmp");
    const auto p = take({{"theta", 0.0}});
    return fmp_surface(sp.tau(), p.at("theta"));
  }
  if (name == "catenoid") {
    require_nil_like(sp, "catenoid");
    const auto p = take({{"E", 1.0}, {"r_max", inf}});
    return catenoid(sp.tau(), p.at("E"), p.at("r_max"));
  }
  if (name == "ideal-polygon") {
    const auto p = take({{"n", 2.0}});
    const double nd = p.at("n");
    if (nd != std::floor(nd) || nd < 2 || nd > 1000)
      throw InvalidArgument("ideal-polygon n must be an integer in [2, 1000]");
    const int n = static_cast<int>(nd);
    GraphSurface g(
        sp, ideal_polygon_domain(sp, 2 * n, BoundaryValues::finite),
        [](BasePoint) { return 0.0; }, [](BasePoint) { return Gradient{}; },
        [](BasePoint) { return Hessian{}; });
    ExampleSurface e{"ideal-polygon", g, {}, true, false, true};
    const double k = sp.kappa();
    e.closed_forms["domain_area"] = [k, n](double) { return ideal_polygon_area(k, n); };
    return e;
  }
  throw InvalidArgument("unknown example '" + name + "'");
}

}  // namespace ekt
