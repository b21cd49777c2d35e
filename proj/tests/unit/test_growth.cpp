#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ekt/growth.hpp"

using namespace ekt;

namespace {
constexpr double pi = std::numbers::pi;

RegionOptions coarse() {
  RegionOptions o;
  o.intrinsic_cells = 64;
  o.intrinsic_max_cells = 256;
  o.intrinsic_rel_tol = 0.02;
  return o;
}
}  // namespace

TEST_SUITE("growth") {
  TEST_CASE("region family names") {
    for (RegionFamily f : {RegionFamily::intrinsic, RegionFamily::extrinsic, RegionFamily::cylinder})
      CHECK(parse_region_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_region_family("ball"), InvalidArgument);
  }

  TEST_CASE("flat plane areas are disks") {
    const auto p = affine_plane(0, 0, 0);
    for (RegionFamily f : {RegionFamily::extrinsic, RegionFamily::cylinder})
      CHECK(region_area(p.graph, f, 3).area == doctest::Approx(9 * pi).epsilon(1e-8));
    CHECK(region_area(p.graph, RegionFamily::intrinsic, 3, coarse()).area ==
          doctest::Approx(9 * pi).epsilon(0.02));
  }

  TEST_CASE("umbrella in Nil for every family") {
    const auto u = umbrella(SpaceParams(0, 1));
    const double R = 2.5, exact = u.closed_forms.at("area")(R);
    CHECK(region_area(u.graph, RegionFamily::cylinder, R).area == doctest::Approx(exact).epsilon(1e-9));
    CHECK(region_area(u.graph, RegionFamily::extrinsic, R).area == doctest::Approx(exact).epsilon(1e-9));
    const AreaSample in = region_area(u.graph, RegionFamily::intrinsic, R, coarse());
    CHECK(in.converged);
    CHECK(in.area == doctest::Approx(exact).epsilon(0.03));
  }

  TEST_CASE("hyperbolic umbrella") {
    const auto u = umbrella(SpaceParams(-1, 1));
    for (double R : {1.0, 3.0, 6.0})
      CHECK(region_area(u.graph, RegionFamily::extrinsic, R).area ==
            doctest::Approx(u.closed_forms.at("area")(R)).epsilon(1e-7));
  }

  TEST_CASE("intrinsic distance on the flat plane") {
    const GraphSurface g(SpaceParams(0, 0), full_plane(), [](BasePoint) { return 0.0; });
    const DistanceField f = intrinsic_distance_field(g, 2, 64);
    double worst = 0;
    for (int j = 0; j <= 64; ++j)
      for (int i = 0; i <= 64; ++i) {
        const BasePoint p = f.position(i, j);
        worst = std::max(worst, std::abs(f.node(i, j) - std::hypot(p.x, p.y)));
      }
    CHECK(worst < 0.02);
    // Dijkstra alone is stuck with the octagonal metric of the grid.
    const DistanceField d = dijkstra_distance_field(g, 2, 64);
    const int i = 32 + 12, j = 32 + 5;
    const BasePoint p = d.position(i, j);
    CHECK(d.node(i, j) > std::hypot(p.x, p.y) + 0.01);
    CHECK_THROWS_AS(intrinsic_distance_field(g, 2, 7), InvalidArgument);
  }

  TEST_CASE("intrinsic distances under a tilted graph") {
    // On the graph of ax in R³ the metric is (1+a²)dx² + dy², so balls are ellipses of area
    // πR²/√(1+a²) in the base, i.e. πR² on the surface.
    const GraphSurface g(SpaceParams(0, 0), full_plane(), [](BasePoint p) { return 2 * p.x; });
    const DistanceField f = intrinsic_distance_field(g, 2, 128);
    CHECK(f.node(64 + 32, 64) == doctest::Approx(std::sqrt(5.0)).epsilon(0.01));
    CHECK(f.node(64, 64 + 32) == doctest::Approx(1).epsilon(0.01));
    CHECK(sublevel_area(g, f, 1.5) == doctest::Approx(2.25 * pi).epsilon(0.02));
  }

  TEST_CASE("areas grow with R and respect the inclusions") {
    // Intrinsic balls lie inside extrinsic balls, and the extrinsic ball lies over D_R.
    const RegionOptions o = coarse();
    for (const GraphSurface& g : {fmp_surface(1, 0).graph, umbrella(SpaceParams(0, 1)).graph}) {
      double prev = 0;
      for (double R : {1.5, 2.5, 3.5}) {
        const double in = region_area(g, RegionFamily::intrinsic, R, o).area;
        const double ex = region_area(g, RegionFamily::extrinsic, R, o).area;
        const double cy = region_area(g, RegionFamily::cylinder, R, o).area;
        CHECK(in <= ex * 1.01);
        CHECK(ex <= cy * (1 + 1e-9));
        CHECK(ex > prev);
        prev = ex;
      }
    }
  }

  TEST_CASE("area bounds dominate the extrinsic area") {
    const std::vector<std::pair<std::string, GraphSurface>> cases{
        {"umbrella", umbrella(SpaceParams(0, 1)).graph},
        {"plane", affine_plane(1, 1, 0.5).graph},
        {"fmp", fmp_surface(1, 0.3).graph},
        {"catenoid", catenoid(1, 1).graph},
    };
    for (const auto& [name, g] : cases) {
      for (double R : {2.0, 4.0}) {
        CAPTURE(name);
        CAPTURE(R);
        const double a = region_area(g, RegionFamily::extrinsic, R).area;
        CHECK(lemma41_bound(g, R).total >= a * (1 - 1e-9));
        CHECK(lemma42_bound(g, R).total >= a * (1 - 1e-9));
      }
    }
  }

  TEST_CASE("calibration against the umbrella") {
    const SpaceParams nil(0, 1);
    const GraphSurface c(nil, full_plane(), [](BasePoint) { return 5.0; });
    const CalibrationResult r0 = calibration_check(c, 2);
    CHECK(r0.vertical_translate);
    CHECK(std::abs(r0.margin) < 1e-9);
    const CalibrationResult r1 =
        calibration_check(GraphSurface(nil, full_plane(), [](BasePoint p) { return 0.1 * p.x; }), 2);
    CHECK(!r1.vertical_translate);
    CHECK(r1.margin > 0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int t = 0; t < 10; ++t) {
      const double a = U(rng), b = U(rng), c2 = U(rng), d = U(rng), e = U(rng);
      const GraphSurface g(nil, full_plane(), [=](BasePoint p) {
        return a * p.x + b * p.y + c2 * p.x * p.x + d * p.x * p.y + e * p.y * p.y * p.y;
      });
      CHECK(calibration_check(g, 1.5).margin >= -1e-8);
    }
  }

  TEST_CASE("zero-boundary sweeps") {
    const auto cat = catenoid(1, 1);
    const CollinKrustReport r = collin_krust_sweep(cat.graph, {4, 8, 16, 32});
    CHECK(r.max_boundary_value < 1e-9);
    CHECK(r.liminf_linear > 0.5);
    CHECK(!r.liminf_quadratic);

    const GraphSurface half(SpaceParams(0, 0), half_plane_domain(), [](BasePoint p) { return p.x; });
    const CollinKrustReport h = collin_krust_sweep(half, {2, 4, 8, 16});
    REQUIRE(h.rows.size() == 4);
    // M is a maximum over sampled rays, so it can miss the true maximum by 1 − cos(π/rays).
    CHECK(h.rows.back().M == doctest::Approx(16).epsilon(2e-4));
    CHECK(h.liminf_linear == doctest::Approx(1).epsilon(2e-4));

    const GraphSurface zero(SpaceParams(0, 0), half_plane_domain(), [](BasePoint) { return 0.0; });
    CHECK_THROWS_AS(collin_krust_sweep(zero, {2, 4}), HypothesisError);
    const GraphSurface lifted(SpaceParams(0, 0), half_plane_domain(),
                              [](BasePoint p) { return p.x + 1; });
    CHECK_THROWS_AS(collin_krust_sweep(lifted, {2, 4}), HypothesisError);
    CHECK_THROWS_AS(collin_krust_sweep(half, {4, 2}), InvalidArgument);
  }

  TEST_CASE("verdicts") {
    std::vector<double> R{2, 3, 4, 5, 6, 8}, cubic, line, noisy;
    for (std::size_t i = 0; i < R.size(); ++i) {
      cubic.push_back(std::pow(R[i], 3));
      line.push_back(R[i]);
      noisy.push_back(std::pow(R[i], 3) * (i % 2 ? 3.0 : 0.3));
    }
    const GrowthFit fc = fit_growth(R, cubic);
    const ExpectedGrowth three{GrowthModel::power, 3, Expectation::exactly, "t"};
    CHECK(growth_verdict(fc, three) == Verdict::consistent);
    CHECK(growth_verdict(fc, {GrowthModel::power, 2, Expectation::exactly, "t"}) == Verdict::violated);
    CHECK(growth_verdict(fc, {GrowthModel::power, 2, Expectation::at_most, "t"}) == Verdict::violated);
    CHECK(growth_verdict(fc, {GrowthModel::power, 2, Expectation::at_least, "t"}) == Verdict::consistent);
    CHECK(growth_verdict(fit_growth(R, line), {GrowthModel::power, 3, Expectation::at_most, "t"}) ==
          Verdict::consistent);
    CHECK(growth_verdict(fit_growth(R, noisy), three) == Verdict::inconclusive);

    std::vector<double> ex;
    for (double r : R) ex.push_back(5 * std::exp(r) + 2 * r);
    const GrowthFit fe = fit_growth(R, ex);
    const ExpRemainderFit rem = fit_exponential_remainder(R, ex);
    std::string note;
    CHECK(growth_verdict(fe, {GrowthModel::exponential, 1, Expectation::exactly, "t"}, rem, {}, &note) ==
          Verdict::consistent);
    CHECK(!note.empty());
    CHECK(growth_verdict(fe, {GrowthModel::exponential, 2, Expectation::exactly, "t"}, rem) ==
          Verdict::violated);
  }

  TEST_CASE("growth table rows") {
    CHECK(table1_rows().size() == 12);
    const auto reps = table1_suite({"ideal-scherk", "k-noids", "entire-critical"});
    REQUIRE(reps.size() == 3);
    for (const GrowthReport& r : reps) {
      CHECK(!r.instantiable);
      CHECK(r.verdict == Verdict::inconclusive);
      CHECK(r.note.rfind("not instantiable", 0) == 0);
    }
    CHECK_THROWS_AS(table1_suite({"nope"}), InvalidArgument);
    Table1Options o;
    o.quick = true;
    const auto z = table1_suite({"zero-boundary-r3"}, o);
    REQUIRE(z.size() == 1);
    CHECK(z[0].verdict == Verdict::consistent);
  }
}
