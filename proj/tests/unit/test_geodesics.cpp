#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ekt/geodesics.hpp"

using namespace ekt;

namespace {

constexpr double pi = std::numbers::pi;

// The closed form exactly as printed (valid away from φ = π/2).
PointE printed_nil(double tau, double phi, double theta, double t) {
  const double c = std::cos(phi), T = std::tan(phi);
  return {T / (2 * tau) * (std::cos(2 * tau * c * t + theta) - std::cos(theta)),
          T / (2 * tau) * (std::sin(2 * tau * c * t + theta) - std::sin(theta)),
          (1 + c * c) / (2 * c) * t - T * T / (4 * tau) * std::sin(2 * tau * c * t)};
}

double dist3(const PointE& a, const PointE& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

// Fourth-order central difference of a closed form at t.
CoordVector fd_velocity(const std::function<PointE(double)>& f, double t, double h = 1e-3) {
  const PointE a = f(t + h), b = f(t - h), c = f(t + 2 * h), d = f(t - 2 * h);
  auto comb = [h](double p1, double m1, double p2, double m2) {
    return (8 * (p1 - m1) - (p2 - m2)) / (12 * h);
  };
  return {comb(a.x, b.x, c.x, d.x), comb(a.y, b.y, c.y, d.y), comb(a.z, b.z, c.z, d.z)};
}

}  // namespace

TEST_SUITE("geodesics") {
  TEST_CASE("ode right-hand side examples") {
    const SpaceParams nil(0, 1), sl2(-1, 1);
    auto d = geodesic_rhs(nil, {{0, 0, 0}, {0, 0, 1}});
    CHECK(d.velocity.norm() == 0.0);
    d = geodesic_rhs(nil, {{0, 0, 0}, {1, 0, 0}});
    CHECK(d.velocity.norm() == 0.0);
    d = geodesic_rhs(sl2, {{0, 0, 0}, {0, 1, 0}});
    CHECK(d.velocity.norm() == 0.0);
    d = geodesic_rhs(sl2, {{0.3, 0.1, 0}, {0.6, 0, 0.8}});
    CHECK(d.velocity.a3 == 0.0);
  }

  TEST_CASE("nil closed form matches the printed formula") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> T(0.2, 2), P(0, pi), Th(-pi, pi), Tt(0, 10);
    for (int i = 0; i < 500; ++i) {
      const double tau = T(rng), phi = P(rng), th = Th(rng), t = Tt(rng);
      if (std::abs(std::cos(phi)) < 1e-3) continue;
      const PointE a = nil_geodesic_closed(tau, phi, th, t);
      const PointE b = printed_nil(tau, phi, th, t);
      CHECK(dist3(a, b) < 1e-9 * (1 + std::abs(b.z) + std::abs(std::tan(phi))));
    }
  }

  TEST_CASE("nil closed form special values") {
    const PointE v = nil_geodesic_closed(1.0, 0.0, 0.7, 2.5);
    CHECK(std::abs(v.x) < 1e-15);
    CHECK(std::abs(v.y) < 1e-15);
    CHECK(v.z == doctest::Approx(2.5).epsilon(1e-15));
    const PointE h = nil_geodesic_closed(1.0, pi / 2, 0.0, 1.7);
    CHECK(h.x == 1.7);
    CHECK(h.y == 0.0);
    CHECK(h.z == 0.0);
    const PointE o = nil_geodesic_closed(1.3, 1.1, 0.4, 0.0);
    CHECK(dist3(o, {0, 0, 0}) == 0.0);
  }

  TEST_CASE("nil closed form agrees with integration") {
    const SpaceParams sp(0, 1);
    for (auto [phi, th, tend] : {std::tuple{pi / 4, 0.0, 5.0}, std::tuple{pi / 3, 0.0, 1.0},
                                 std::tuple{2.2, 1.3, 4.0}}) {
      const auto spec = nil_spec(1.0, phi, th);
      const auto samples = integrate_geodesic(sp, spec, tend, 1e-9, 51);
      for (const auto& s : samples) {
        CHECK(dist3(s.point, nil_geodesic_closed(1.0, phi, th, s.t)) < 1e-7);
        CHECK(std::abs(s.velocity.norm() - 1.0) < 1e-8);
        CHECK(std::abs(s.velocity.a3 - spec.direction.a3) < 1e-8);
      }
    }
  }

  TEST_CASE("vertical geodesic") {
    const SpaceParams sp(0, 1);
    GeodesicSpec spec;
    spec.direction = {0, 0, 1};
    for (const auto& s : integrate_geodesic(sp, spec, 3.0, 1e-10, 7)) {
      CHECK(std::abs(s.point.x) < 1e-14);
      CHECK(std::abs(s.point.y) < 1e-14);
      CHECK(std::abs(s.point.z - s.t) < 1e-12);
    }
  }

  TEST_CASE("left translation of a nil spec") {
    const SpaceParams sp(0, 0.7);
    const auto spec = nil_spec(0.7, 0.9, 0.2, {1.0, -2.0, 0.5});
    const auto samples = integrate_geodesic(sp, spec, 3.0, 1e-10, 11);
    for (const auto& s : samples)
      CHECK(dist3(s.point, closed_form_sample(sp, spec, s.t).point) < 1e-7);
  }

  TEST_CASE("S~L2 family examples") {
    const SpaceParams sp(-1, 1);
    for (double t : {0.3, 1.0, 4.0}) {
      const PointE h = sl2_geodesic_closed(sp, family::Sl2Horizontal{}, t);
      CHECK(std::abs(h.x) < 1e-15);
      CHECK(std::abs(h.y - 2 * std::tanh(t / 2)) < 1e-14);
      CHECK(std::abs(h.z) < 1e-15);
      const PointE e = sl2_geodesic_closed(sp, family::Sl2Elliptic{0.0}, t);
      CHECK(dist3(e, {0, 0, t}) < 1e-14);
    }
  }

  TEST_CASE("S~L2 closed forms agree with integration") {
    const SpaceParams sp(-1, 1);
    const std::vector<GeodesicFamily> fams = {family::Sl2Horizontal{}, family::Sl2Elliptic{1.2},
                                              family::Sl2Parabolic{}, family::Sl2Hyperbolic{3.0}};
    for (const auto& f : fams) {
      const auto spec = sl2_spec(sp, f);
      const auto samples = integrate_geodesic(sp, spec, 2.1, 1e-11, 31);
      for (const auto& s : samples) {
        const PointE c = sl2_geodesic_closed(sp, f, s.t);
        CHECK_MESSAGE(dist3(s.point, c) < 1e-7, family_name(f), " t=", s.t);
      }
    }
    const auto hyp = sl2_spec(sp, family::Sl2Hyperbolic{3.0});
    const auto pts = integrate_geodesic(sp, hyp, 0.7, 1e-12, 2);
    CHECK(dist3(pts.back().point, sl2_geodesic_closed(sp, family::Sl2Hyperbolic{3.0}, 0.7)) <
          1e-7);
  }

  TEST_CASE("S~L2 initial velocities match the stated directions") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> K(-4, -0.25), T(0.2, 2), U(0, 1);
    for (int i = 0; i < 200; ++i) {
      const SpaceParams sp(K(rng), T(rng));
      const double amax = 2 / sp.k();
      const std::vector<GeodesicFamily> fams = {
          family::Sl2Horizontal{}, family::Sl2Elliptic{0.99 * amax * U(rng)},
          family::Sl2Parabolic{}, family::Sl2Hyperbolic{amax * (1.01 + 3 * U(rng))}};
      for (const auto& f : fams) {
        const auto spec = sl2_spec(sp, f);
        const CoordVector v =
            fd_velocity([&](double t) { return sl2_geodesic_closed(sp, f, t); }, 0.0);
        CHECK(std::abs(v.dx - spec.direction.a1) < 1e-10);
        CHECK(std::abs(v.dy - spec.direction.a2) < 1e-10);
        CHECK(std::abs(v.dz - spec.direction.a3) < 1e-10);
      }
    }
  }

  TEST_CASE("closed forms satisfy the ODE with unit speed and constant a3") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> T(0.2, 2), P(0, pi), Th(-pi, pi), Tt(0, 10), U(0, 1),
        K(-4, -0.25);
    double worst = 0, worst_speed = 0, worst_a3 = 0;
    for (int i = 0; i < 1000; ++i) {
      const double tau = T(rng), phi = P(rng), th = Th(rng), t = Tt(rng);
      const SpaceParams sp(0, tau);
      auto curve = [&](double s) { return nil_geodesic(tau, phi, th, s); };
      worst = std::max(worst, ode_residual(sp, curve, t));
      const CurvePoint c = curve(t);
      const FrameVector a = coord_to_frame(sp, c.point, c.velocity);
      worst_speed = std::max(worst_speed, std::abs(a.norm() - 1));
      worst_a3 = std::max(worst_a3, std::abs(a.a3 - std::cos(phi)));
    }
    CHECK(worst < 1e-5);
    CHECK(worst_speed < 1e-8);
    CHECK(worst_a3 < 1e-8);
  }

  TEST_CASE("product geodesics") {
    const SpaceParams sp(-1, 0);
    const FrameVector d{0.6, 0, 0.8};
    const auto spec = product_spec(sp, d, {0.3, -0.2, 1.0});
    const auto samples = integrate_geodesic(sp, spec, 2.0, 1e-11, 9);
    for (const auto& s : samples) {
      const auto c = closed_form_sample(sp, spec, s.t);
      CHECK(dist3(s.point, c.point) < 1e-8);
      CHECK((s.velocity - c.velocity).norm() < 1e-8);
    }
  }

  TEST_CASE("spec validation") {
    const SpaceParams sp(-1, 1);
    CHECK_THROWS_AS(sl2_spec(sp, family::Sl2Elliptic{2.0}), InvalidArgument);
    CHECK_THROWS_AS(sl2_spec(sp, family::Sl2Hyperbolic{2.0}), InvalidArgument);
    CHECK_THROWS_AS(sl2_spec(SpaceParams(-1, 0), family::Sl2Parabolic{}), InvalidArgument);
    CHECK_NOTHROW(sl2_spec(SpaceParams(-1, 0), family::Sl2Horizontal{}));
    CHECK_THROWS_AS(nil_spec(1.0, 4.0, 0.0), InvalidArgument);
    GeodesicSpec bad;
    bad.direction = {1, 1, 0};
    CHECK_THROWS_AS(integrate_geodesic(sp, bad, 1.0, 1e-9), InvalidArgument);
  }

  TEST_CASE("integration that leaves the model is reported") {
    const SpaceParams sp(-1, 0);
    GeodesicSpec spec;
    spec.start = {1.99, 0, 0};
    spec.direction = {1, 0, 0};
    CHECK_THROWS(integrate_geodesic(sp, spec, 50.0, 1e-9));
  }

  TEST_CASE("nil max height against grid search") {
    for (double tau : {0.5, 1.0, 2.0}) {
      for (double R : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double best = -1e300;
        const int n = 10000;
        for (int i = 0; i <= n; ++i) {
          const double phi = 0.5 * pi * i / n;
          best = std::max(best, nil_geodesic_closed(tau, phi, 0.0, R).z);
        }
        CHECK(std::abs(best - nil_max_height(tau, R)) < 1e-4);
      }
    }
    CHECK(nil_max_height(1.0, 1.0) == 1.0);
    CHECK(nil_max_height(1.0, pi / 2) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(nil_max_height(1.0, 4.0) == doctest::Approx((pi * pi + 64) / (4 * pi)).epsilon(1e-15));
  }

  TEST_CASE("zeta_R") {
    for (double tau : {0.5, 1.0, 3.0}) {
      for (double R : {0.7, 2.0, 9.0}) {
        CHECK(zeta_r(tau, R, 2 * tau * R) == doctest::Approx(R).epsilon(1e-15));
        if (2 * tau * R > pi)
          CHECK(zeta_r(tau, R, pi) ==
                doctest::Approx((pi * pi + 4 * tau * tau * R * R) / (4 * tau * pi)).epsilon(1e-14));
        // ζ_R(s) is z(R) of the geodesic with cos φ = s / 2τR.
        const double s = 0.37 * 2 * tau * R;
        CHECK(zeta_r(tau, R, s) ==
              doctest::Approx(nil_geodesic_closed(tau, std::acos(0.37), 0, R).z).epsilon(1e-12));
        for (double root : zeta_r_critical_points(tau, R))
          CHECK(std::abs(zeta_r_prime(tau, R, root)) < 1e-10);
      }
    }
    CHECK(zeta_r_critical_points(1.0, 20.0).size() > 3);
    CHECK_THROWS_AS(zeta_r(1, 1, 3), InvalidArgument);
  }

  TEST_CASE("S~L2 height bound") {
    CHECK(sl2_max_height_bound(SpaceParams(-1, 0), 3.0) == 3.0);
    for (double R : {0.5, 2.0, 7.0})
      CHECK(sl2_max_height_bound(SpaceParams(-1, 1), R) ==
            doctest::Approx(std::max(10 * R + 2 * pi, std::sqrt(5.0) * R + 2 * pi)));
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> K(-4, -0.25), T(0, 2), U(0, 1), Rr(0.1, 10);
    for (int i = 0; i < 1000; ++i) {
      const SpaceParams sp(K(rng), T(rng));
      const double R = Rr(rng), amax = 2 / sp.k();
      std::vector<GeodesicFamily> fams = {family::Sl2Horizontal{}};
      if (sp.tau() > 0) {
        fams.push_back(family::Sl2Elliptic{0.999 * amax * U(rng)});
        fams.push_back(family::Sl2Parabolic{});
        fams.push_back(family::Sl2Hyperbolic{amax * (1.001 + 5 * U(rng))});
      }
      for (const auto& f : fams)
        CHECK(std::abs(sl2_geodesic_closed(sp, f, R).z) <= sl2_max_height_bound(sp, R));
    }
  }

  TEST_CASE("distance examples") {
    const SpaceParams nil(0, 1);
    CHECK(distance(nil, {0, 0, 0}, {1, 0, 0}).value == doctest::Approx(1.0).epsilon(1e-14));
    const PointE q = nil_geodesic_closed(1.0, pi / 3, 0, 0.5);
    CHECK(std::abs(distance(nil, {0, 0, 0}, q).value - 0.5) < 1e-6);
    CHECK(distance(SpaceParams(-1, 0), {0, 0, 0}, {0, 0, 2}).value == 2.0);
    CHECK(distance(SpaceParams(0, 0), {1, 2, 3}, {4, 6, 3}).value == doctest::Approx(5.0));
    // Vertical points beyond the first conjugate height.
    CHECK(distance(nil, {0, 0, 0}, {0, 0, 1}).value == doctest::Approx(1.0));
    CHECK(distance(nil, {0, 0, 0}, {0, 0, 10}).value ==
          doctest::Approx(std::sqrt(pi * (20 - pi))));
  }

  TEST_CASE("nil distance equals arclength on minimizing arcs") {
    // A geodesic from the origin minimizes while its horizontal projection turns less than
    // a full circle (τ|cos φ| t < π).
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> T(0.2, 2), P(0, pi), Th(-pi, pi), U(0.02, 0.98);
    for (int i = 0; i < 1000; ++i) {
      const double tau = T(rng), phi = P(rng), th = Th(rng);
      const double c = std::abs(std::cos(phi));
      const double tmax = c > 1e-6 ? std::min(20.0, pi / (tau * c)) : 20.0;
      const double t = U(rng) * tmax;
      const PointE q = nil_geodesic_closed(tau, phi, th, t);
      const auto d = distance(SpaceParams(0, tau), {0, 0, 0}, q);
      CHECK(std::abs(d.value - t) < 1e-8 * std::max(1.0, t));
    }
  }

  TEST_CASE("nil distance beyond the cut time is shorter than the arc") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> P(0.2, 1.2), U(1.1, 2.5);
    for (int i = 0; i < 200; ++i) {
      const double tau = 1.0, phi = P(rng);
      const double t = U(rng) * pi / (tau * std::cos(phi));
      const PointE q = nil_geodesic_closed(tau, phi, 0.3, t);
      const auto d = distance(SpaceParams(0, tau), {0, 0, 0}, q);
      CHECK(d.value < t - 1e-6);
      CHECK(d.branches >= 2);
    }
  }

  TEST_CASE("nil distance is left invariant and symmetric") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> U(-3, 3);
    const double tau = 0.8;
    const SpaceParams sp(0, tau);
    for (int i = 0; i < 200; ++i) {
      const PointE a{U(rng), U(rng), U(rng)}, b{U(rng), U(rng), U(rng)}, g{U(rng), U(rng), U(rng)};
      const double d = distance(sp, a, b).value;
      CHECK(std::abs(distance(sp, nil_multiply(tau, g, a), nil_multiply(tau, g, b)).value - d) <
            1e-9 * (1 + d));
      CHECK(std::abs(distance(sp, b, a).value - d) < 1e-9 * (1 + d));
      CHECK(nil_distance_from_origin(tau, nil_multiply(tau, nil_inverse(a), b)) ==
            doctest::Approx(d).epsilon(1e-12));
    }
  }

  TEST_CASE("group law is associative with the stated inverse") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> U(-3, 3);
    for (int i = 0; i < 100; ++i) {
      const PointE a{U(rng), U(rng), U(rng)}, b{U(rng), U(rng), U(rng)}, c{U(rng), U(rng), U(rng)};
      CHECK(dist3(nil_multiply(1.3, nil_multiply(1.3, a, b), c),
                  nil_multiply(1.3, a, nil_multiply(1.3, b, c))) < 1e-12);
      CHECK(dist3(nil_multiply(1.3, a, nil_inverse(a)), {0, 0, 0}) < 1e-15);
    }
  }

  TEST_CASE("S~L2 distance bracket") {
    const SpaceParams sp(-1, 1);
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> U(-1.3, 1.3);
    for (int i = 0; i < 100; ++i) {
      const PointE a{U(rng), U(rng), U(rng)}, b{U(rng), U(rng), U(rng)};
      const auto d = distance(sp, a, b);
      CHECK(d.lower <= d.upper);
      CHECK(d.lower == doctest::Approx(base_distance(sp, a.base(), b.base())));
    }
    const auto d = distance(sp, {0, 0, 0}, {0.5, 0.9, 0});
    CHECK(d.exact);
    CHECK(d.value == doctest::Approx(2 * std::atanh(std::hypot(0.5, 0.9) / 2)));
    // An integrated geodesic from the origin gives a point whose true distance is the arclength
    // (short arc), which the bracket must contain.
    const auto spec = sl2_spec(sp, family::Sl2Elliptic{1.0});
    const PointE q = sl2_geodesic_closed(sp, family::Sl2Elliptic{1.0}, 0.4);
    const auto dq = distance(sp, {0, 0, 0}, q);
    CHECK(dq.lower <= 0.4 + 1e-12);
    CHECK(dq.upper >= 0.4 - 1e-12);
    (void)spec;
  }

  TEST_CASE("hyperbolic base distance") {
    const SpaceParams sp(-4, 0);
    CHECK(base_distance(sp, {0, 0}, {0.5, 0}) == doctest::Approx(std::atanh(0.5)));
    const BasePoint a{0.2, 0.3}, b{-0.4, 0.1}, c{0.6, -0.5};
    const BasePoint ta = base_translate(sp, c, a), tb = base_translate(sp, c, b);
    CHECK(base_distance(sp, ta, tb) == doctest::Approx(base_distance(sp, a, b)).epsilon(1e-12));
  }

  TEST_CASE("delta_alpha") {
    CHECK(delta_alpha(1, {3, 4, 0}) == 5.0);
    CHECK(delta_alpha(1, {0, 0, 9}) == 3.0);
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> U(-5, 5);
    for (int i = 0; i < 100; ++i) {
      const PointE p{U(rng), U(rng), U(rng)};
      CHECK(delta_alpha(1.7, {2 * p.x, 2 * p.y, 4 * p.z}) ==
            doctest::Approx(2 * delta_alpha(1.7, p)).epsilon(1e-14));
    }
  }

  TEST_CASE("distance sandwich constants are positive and finite") {
    const double tau = 1.0;
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> U(-10, 10), Z(-60, 60);
    double m = 1e300, M = 0;
    int used = 0;
    for (int i = 0; i < 1000; ++i) {
      const PointE p{U(rng), U(rng), Z(rng)};
      const double d = nil_distance_from_origin(tau, p);
      if (d <= pi / (2 * tau)) continue;
      const double ratio = delta_alpha(1.0, p) / d;
      m = std::min(m, ratio);
      M = std::max(M, ratio);
      ++used;
    }
    CHECK(used > 900);
    CHECK(m > 0.1);
    CHECK(M <= 1.0 + 1e-12);
  }
}
