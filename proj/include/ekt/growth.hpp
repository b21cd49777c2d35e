#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekt/fit.hpp"
#include "ekt/graphs.hpp"
#include "ekt/surfaces.hpp"

namespace ekt {

enum class RegionFamily { intrinsic, extrinsic, cylinder };
std::string to_string(RegionFamily f);
RegionFamily parse_region_family(const std::string& s);

struct RegionOptions {
  QuadratureOptions quadrature{};
  // Intrinsic balls: grid cells across the box [−ρ, ρ]², doubled until two consecutive grids
  // agree to intrinsic_rel_tol.
  int intrinsic_cells = 128;
  int intrinsic_max_cells = 512;
  double intrinsic_rel_tol = 0.01;
  double membership_tol = 1e-12;
  unsigned threads = 1;
};

struct AreaSample {
  double R = 0, area = 0, error = 0;
  bool converged = false;
};

// Area of Σ ∩ A_R where A_R is the intrinsic ball about the point over the base origin, the
// ambient ball about that point, or the cylinder over D_R(0).
std::vector<AreaSample> region_areas(const GraphSurface& g, RegionFamily family,
                                     const std::vector<double>& radii,
                                     const RegionOptions& opts = {});
AreaSample region_area(const GraphSurface& g, RegionFamily family, double R,
                       const RegionOptions& opts = {});

// Point of Σ over the base origin, or the origin itself when Ω misses it.
PointE surface_center(const GraphSurface& g);

// First fundamental form of the graph in base coordinates.
struct InducedMetric {
  double g11 = 0, g12 = 0, g22 = 0;
};
InducedMetric induced_metric(const GraphSurface& g, BasePoint p);

// Intrinsic distance from the point over the base origin, sampled on the nodes of a uniform
// (cells+1)² grid over [−half_width, half_width]²; +inf outside the domain.
struct DistanceField {
  double half_width = 0;
  int cells = 0;
  std::vector<double> d;
  double spacing() const { return 2 * half_width / cells; }
  double node(int i, int j) const { return d[static_cast<std::size_t>(j) * (cells + 1) + i]; }
  BasePoint position(int i, int j) const {
    return {-half_width + i * spacing(), -half_width + j * spacing()};
  }
};

// 8-connected Dijkstra on the graph-metric grid, then semi-Lagrangian sweeps over the eight
// triangles around every node until the field is stationary.
DistanceField intrinsic_distance_field(const GraphSurface& g, double half_width, int cells);
// Dijkstra only, for comparison.
DistanceField dijkstra_distance_field(const GraphSurface& g, double half_width, int cells);

// ∫_{d ≤ R} W dA over the field, by bilinear interpolation inside each cell.
double sublevel_area(const GraphSurface& g, const DistanceField& f, double R, int sub = 4);

// ---------------------------------------------------------------------------------------------

enum class Expectation { exactly, at_most, at_least };
enum class Verdict { consistent, violated, inconclusive };
std::string to_string(Expectation e);
std::string to_string(Verdict v);

struct ExpectedGrowth {
  GrowthModel model = GrowthModel::power;
  double order = 0;  // exponent, or exponential rate
  Expectation kind = Expectation::exactly;
  std::string row;  // which row of the growth table is being checked
};

struct VerdictTolerances {
  double exponent = 0.4;
  double rate_relative = 0.10;
  double sigmas = 2;
  double max_rms = 0.1;  // larger log-residuals make the verdict inconclusive
};

struct GrowthReport {
  std::string surface;
  std::string family;
  bool instantiable = true;
  std::vector<AreaSample> samples;
  std::optional<GrowthFit> fit;
  std::optional<ExpRemainderFit> remainder_fit;
  ExpectedGrowth expected;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

Verdict growth_verdict(const GrowthFit& fit, const ExpectedGrowth& expected,
                       const std::optional<ExpRemainderFit>& remainder = std::nullopt,
                       const VerdictTolerances& tol = {}, std::string* note = nullptr);

GrowthReport growth_report(const std::string& surface, const GraphSurface& g, RegionFamily family,
                           const std::vector<double>& radii, const ExpectedGrowth& expected,
                           const RegionOptions& opts = {}, const VerdictTolerances& tol = {});

// ---------------------------------------------------------------------------------------------

struct CalibrationResult {
  double area = 0, umbrella_area = 0, margin = 0, error = 0;
  bool vertical_translate = false;  // u − u(0) vanishes on the sample grid
};

// Compares area(Σ∩C_R) with that of the umbrella through the base origin.
CalibrationResult calibration_check(const GraphSurface& g, double R,
                                    const QuadratureOptions& opts = {});

struct CollinKrustRow {
  double r = 0, M = 0, boundary_length = 0;
};

struct CollinKrustReport {
  std::vector<CollinKrustRow> rows;
  double liminf_linear = 0;  // min of M(r)/r over the upper half of the radii
  bool bounded_boundary_length = false;
  std::optional<double> liminf_quadratic;  // min of M(r)/r² when the arcs Ω∩∂D_r stay bounded
  double max_boundary_value = 0;
};

// Throws HypothesisError when u does not vanish on the sampled finite-value boundary or when u
// is identically zero on the sample grid.
CollinKrustReport collin_krust_sweep(const GraphSurface& g, const std::vector<double>& radii,
                                     int rays = 256, int steps = 400,
                                     double boundary_tol = 1e-6);

// ---------------------------------------------------------------------------------------------

struct Table1Options {
  RegionOptions region{};
  bool quick = false;  // fewer radii, for smoke runs
};

std::vector<GrowthReport> table1_suite(const std::vector<std::string>& rows = {},
                                       const Table1Options& opts = {});
std::vector<std::string> table1_rows();

}  // namespace ekt
