#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ekt/surfaces.hpp"

using namespace ekt;

namespace {
constexpr double pi = std::numbers::pi;

double max_h_on_grid(const GraphSurface& g, BasePoint lo, BasePoint hi, int n = 50) {
  double m = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const BasePoint p{lo.x + (hi.x - lo.x) * (i + 0.5) / n, lo.y + (hi.y - lo.y) * (j + 0.5) / n};
      if (!g.domain.contains(p)) continue;
      m = std::max(m, std::abs(mean_curvature(g, p)));
    }
  return m;
}

template <class F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}
}  // namespace

TEST_SUITE("surfaces") {
  TEST_CASE("umbrella closed forms") {
    const auto u = umbrella(SpaceParams(0, 1));
    CHECK(u.intrinsic_equals_extrinsic);
    CHECK(u.closed_forms.at("area")(2) == doctest::Approx(2 * pi / 3 * (std::pow(5, 1.5) - 1)));
    // τ → 0 recovers the flat disk.
    const auto small = umbrella(SpaceParams(0, 1e-5));
    CHECK(small.closed_forms.at("area")(3) == doctest::Approx(9 * pi).epsilon(1e-8));
    CHECK(umbrella(SpaceParams(0, 0)).closed_forms.at("area")(3) == doctest::Approx(9 * pi));
    const auto h0 = umbrella(SpaceParams(-1, 0));
    CHECK(h0.closed_forms.at("area")(3) ==
          doctest::Approx(4 * pi * std::pow(std::sinh(1.5), 2)).epsilon(1e-14));
    // κ < 0, τ > 0: the area against an independent Simpson rule in the model radius.
    const auto h1 = umbrella(SpaceParams(-1, 1));
    const double rho = 2 * std::tanh(1.0);
    const double oracle = 2 * pi * simpson([](double r) {
      const double l = 1 / (1 - r * r / 4);
      return r * std::sqrt(1 + r * r) * l * l;
    }, 0, rho, 20000);
    CHECK(h1.closed_forms.at("area")(2) == doctest::Approx(oracle).epsilon(1e-10));
    // The leading term dominates the area's exponential growth.
    const double ratio = h1.closed_forms.at("area")(14) / h1.closed_forms.at("leading")(14);
    CHECK(ratio == doctest::Approx(1).epsilon(1e-4));
  }

  TEST_CASE("minimal examples have zero mean curvature") {
    CHECK(max_h_on_grid(umbrella(SpaceParams(0, 1)).graph, {-3, -3}, {3, 3}) < 1e-8);
    CHECK(max_h_on_grid(umbrella(SpaceParams(-1, 1)).graph, {-1.3, -1.3}, {1.3, 1.3}) < 1e-8);
    CHECK(max_h_on_grid(affine_plane(1, 1, 0).graph, {-3, -3}, {3, 3}) < 1e-6);
    CHECK(max_h_on_grid(affine_plane(0.5, -2, 3).graph, {-3, -3}, {3, 3}) < 1e-6);
    for (double th : {-1.0, 0.0, 1.0})
      CHECK(max_h_on_grid(fmp_surface(1, th).graph, {-3, -3}, {3, 3}) < 1e-6);
    CHECK(max_h_on_grid(catenoid(1, 1).graph, {-5, -5}, {5, 5}) < 1e-6);
    CHECK(max_h_on_grid(catenoid(0.5, 2).graph, {-8, -8}, {8, 8}) < 1e-6);
  }

  TEST_CASE("finite differences agree with the analytic curvature") {
    const auto c = catenoid(1, 1);
    const auto f = fmp_surface(2, 0.5);
    for (const BasePoint p : {BasePoint{1.5, 0.3}, BasePoint{-2, 2}, BasePoint{0.2, -3}}) {
      CHECK(std::abs(mean_curvature(c.graph, p, CurvatureMethod::finite_difference)) < 1e-3);
      CHECK(std::abs(mean_curvature(f.graph, p, CurvatureMethod::finite_difference)) < 1e-3);
    }
  }

  TEST_CASE("a non-minimal graph is detected") {
    const GraphSurface g(SpaceParams(0, 1), full_plane(),
                         [](BasePoint p) { return p.x * p.x; });
    CHECK(std::abs(mean_curvature(g, {0.5, 0.5})) > 1e-2);
  }

  TEST_CASE("fmp formula") {
    const auto f0 = fmp_surface(1.5, 0);
    CHECK(f0.graph.u({2, 3}) == doctest::Approx(1.5 * 6));
    CHECK_THROWS_AS(fmp_surface(0, 1), InvalidArgument);
    // Diamond area under ds² = (1 + 4τ²y²)dx² + dy² against the closed form.
    const double tau = 0.7, R = 3;
    const double diamond = 4 * simpson([&](double y) {
      return (R - y) * std::sqrt(1 + 4 * tau * tau * y * y);
    }, 0, R, 20000);
    CHECK(fmp_surface(tau, 0).closed_forms.at("intrinsic_lower")(R) ==
          doctest::Approx(diamond).epsilon(1e-10));
  }

  TEST_CASE("fmp two-segment paths have length |x| + |y|") {
    // For θ = 0 the graph of τxy is horizontal along y = 0 and vertical along x = const, so
    // the segment lengths in the ambient metric are |x| and |y|.
    const double tau = 1.3;
    const auto f = fmp_surface(tau, 0);
    auto seg_len = [&](BasePoint a, BasePoint b) {
      const GaussRule& r = gauss_legendre(20);
      double L = 0;
      for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double t = 0.5 * (r.x[i] + 1);
        const BasePoint p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        const Gradient d = f.graph.gradient(p);
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double a3 = d.ux * dx + d.uy * dy + tau * (p.y * dx - p.x * dy);
        L += 0.5 * r.w[i] * std::sqrt(dx * dx + dy * dy + a3 * a3);
      }
      return L;
    };
    CHECK(seg_len({0, 0}, {2.5, 0}) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(seg_len({2.5, 0}, {2.5, -1.7}) == doctest::Approx(1.7).epsilon(1e-14));
  }

  TEST_CASE("catenoid height") {
    CHECK(catenoid_height(1, 1, 1) == 0);
    CHECK_THROWS_AS(catenoid_height(1, 1, 0.5), DomainError);
    CHECK_THROWS_AS(catenoid(1, 1, 0.5), InvalidArgument);
    for (auto [E, tau] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
      const double r = 100 * E;
      CHECK(catenoid_height(tau, E, r) / r == doctest::Approx(E * tau).epsilon(0.05));
    }
    // Raw integral with the 1/√(s−E) singularity removed by s = E + v².
    const double E = 1.2, tau = 0.8, r = 3;
    const double oracle = simpson([&](double v) {
      const double s = E + v * v;
      return 2 * E * std::sqrt(1 + tau * tau * s * s) / std::sqrt(s + E);
    }, 0, std::sqrt(r - E), 20000);
    CHECK(catenoid_height(tau, E, r) == doctest::Approx(oracle).epsilon(1e-8));
    // τ = 0 is the Euclidean catenoid E·acosh(r/E).
    CHECK(catenoid_height(0, 2, 7) == doctest::Approx(2 * std::acosh(3.5)).epsilon(1e-13));
    // h' against a central difference of h.
    const double hp = (catenoid_height(tau, E, r + 1e-5) - catenoid_height(tau, E, r - 1e-5)) / 2e-5;
    CHECK(catenoid_slope(tau, E, r) == doctest::Approx(hp).epsilon(1e-8));
  }

  TEST_CASE("catenoid profile") {
    const CatenoidProfile p = catenoid_profile(1, 1, 40, 1e-10);
    CHECK(p.first_integral_drift() < 1e-8);
    double worst = 0;
    for (const ProfileSample& s : p.samples) {
      CHECK(s.r >= 1 - 1e-12);
      if (s.r > 1 + 1e-6) worst = std::max(worst, std::abs(s.h - catenoid_height(1, 1, s.r)));
    }
    CHECK(worst < 1e-6);
    // Rotational profiles with H ≠ 0 keep their own first integral.
    const CatenoidProfile q = cmc_profile(0.5, 0.3, {0, 0, 1.0, 0.4}, 20, 1e-10);
    CHECK(q.first_integral_drift() < 1e-8);
    CHECK(q.E == doctest::Approx(std::cos(0.4) + 0.3));
    CHECK_THROWS_AS(cmc_profile(1, 0, {0, 0, -1, 0}, 1), InvalidArgument);
  }

  TEST_CASE("ideal polygons") {
    CHECK(ideal_polygon_area(-1, 2) == doctest::Approx(2 * pi));
    CHECK(ideal_polygon_area(-1, 3) == doctest::Approx(4 * pi));
    CHECK(ideal_polygon_area(-4, 2) == doctest::Approx(pi / 2));
    CHECK(ideal_polygon_area(-1, 2, 0.25) == doctest::Approx(2 * pi / 0.75));
    CHECK_THROWS_AS(ideal_polygon_area(-1, 2, 0.5), InvalidArgument);
    CHECK_THROWS_AS(ideal_polygon_area(-1, 1), InvalidArgument);
    for (double k : {-1.0, -4.0})
      for (int n : {2, 3, 5}) {
        // 2n − 2 ideal triangles of area π/(−κ).
        CHECK(ideal_polygon_area_numeric(k, n) == doctest::Approx((2 * n - 2) * pi / -k).epsilon(1e-10));
        CHECK(ideal_polygon_area_numeric(k, n) == doctest::Approx(ideal_polygon_area(k, n)).epsilon(1e-10));
      }
  }

  TEST_CASE("registry") {
    const SpaceParams nil(0, 1);
    for (const std::string& n : example_names()) {
      const SpaceParams sp = n == "ideal-polygon" ? SpaceParams(-1, 1) : nil;
      const ExampleSurface e = example_by_name(n, sp);
      CHECK(e.name == n);
      CHECK(e.minimal);
    }
    CHECK(example_by_name("plane", nil, {{"a", 2}, {"b", 3}}).graph.u({1, 1}) == 5);
    CHECK_THROWS_AS(example_by_name("plane", nil, {{"c", 2}}), InvalidArgument);
    CHECK_THROWS_AS(example_by_name("helicoid", nil), InvalidArgument);
    CHECK_THROWS_AS(example_by_name("fmp", SpaceParams(-1, 1)), InvalidArgument);
    CHECK_THROWS_AS(example_by_name("ideal-polygon", SpaceParams(-1, 1), {{"n", 2.5}}),
                    InvalidArgument);
    const auto ip = example_by_name("ideal-polygon", SpaceParams(-1, 0), {{"n", 3}});
    CHECK(ip.closed_forms.at("domain_area")(1) == doctest::Approx(4 * pi));
    CHECK(ip.graph.domain.contains({0, 0}));
  }
}
