#include "ekt/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include "ekt/balls.hpp"
#include "ekt/errors.hpp"
#include "ekt/parallel.hpp"

namespace ekt {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

std::string to_string(RegionFamily f) {
  switch (f) {
    case RegionFamily::intrinsic: return "intrinsic";
    case RegionFamily::extrinsic: return "extrinsic";
    case RegionFamily::cylinder: return "cylinder";
  }
  return "?";
}

RegionFamily parse_region_family(const std::string& s) {
  if (s == "intrinsic") return RegionFamily::intrinsic;
  if (s == "extrinsic") return RegionFamily::extrinsic;
  if (s == "cylinder") return RegionFamily::cylinder;
  throw InvalidArgument("unknown region family '" + s + "' (intrinsic, extrinsic, cylinder)");
}

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::exactly: return "exactly";
    case Expectation::at_most: return "at_most";
    case Expectation::at_least: return "at_least";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

PointE surface_center(const GraphSurface& g) {
  const BasePoint o{0, 0};
  if (g.domain.contains(o)) return {0, 0, g.u(o)};
  return {0, 0, 0};
}

InducedMetric induced_metric(const GraphSurface& g, BasePoint p) {
  const double l = lambda(g.sp, p), t = g.sp.tau();
  const Gradient d = g.gradient(p);
  const double a = d.ux + t * l * p.y, b = d.uy - t * l * p.x;
  return {l * l + a * a, a * b, l * l + b * b};
}

// ---------------------------------------------------------------------------------------------
// Intrinsic distance

namespace {

struct Grid {
  int cells = 0, n = 0;  // n = cells + 1 nodes per side
  double half_width = 0, h = 0;
  std::vector<char> valid;
  std::vector<InducedMetric> metric;
  std::size_t origin = 0;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * n + i; }
};

Grid make_grid(const GraphSurface& g, double half_width, int cells) {
  if (!(half_width > 0)) throw InvalidArgument("grid half width must be > 0");
  if (cells < 4 || cells % 2 != 0) throw InvalidArgument("grid cells must be even and >= 4");
  if (!g.domain.contains(BasePoint{0, 0}))
    throw InvalidArgument("intrinsic balls are centered over the base origin, which is not in the "
                          "domain");
  Grid G;
  G.cells = cells;
  G.n = cells + 1;
  G.half_width = half_width;
  G.h = 2 * half_width / cells;
  G.valid.assign(static_cast<std::size_t>(G.n) * G.n, 0);
  G.metric.resize(G.valid.size());
  for (int j = 0; j < G.n; ++j)
    for (int i = 0; i < G.n; ++i) {
      const BasePoint p{-half_width + i * G.h, -half_width + j * G.h};
      if (!in_model(g.sp, p) || !g.domain.contains(p)) continue;
      const std::size_t k = G.index(i, j);
      G.valid[k] = 1;
      G.metric[k] = induced_metric(g, p);
    }
  G.origin = G.index(cells / 2, cells / 2);
  return G;
}

constexpr int di[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int dj[8] = {0, 1, 1, 1, 0, -1, -1, -1};

double quad(const InducedMetric& m, double a, double b) {
  return m.g11 * a * a + 2 * m.g12 * a * b + m.g22 * b * b;
}

std::vector<double> dijkstra(const Grid& G) {
  std::vector<double> d(G.valid.size(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
  d[G.origin] = 0;
  q.emplace(0.0, G.origin);
  while (!q.empty()) {
    const auto [dist, k] = q.top();
    q.pop();
    if (dist > d[k]) continue;
    const int i = static_cast<int>(k % G.n), j = static_cast<int>(k / G.n);
    for (int s = 0; s < 8; ++s) {
      const int ii = i + di[s], jj = j + dj[s];
      if (ii < 0 || jj < 0 || ii >= G.n || jj >= G.n) continue;
      const std::size_t kk = G.index(ii, jj);
      if (!G.valid[kk]) continue;
      const InducedMetric& a = G.metric[k];
      const InducedMetric& b = G.metric[kk];
      const InducedMetric mid{0.5 * (a.g11 + b.g11), 0.5 * (a.g12 + b.g12), 0.5 * (a.g22 + b.g22)};
      const double len = G.h * std::sqrt(quad(mid, di[s], dj[s]));
      if (dist + len < d[kk]) {
        d[kk] = dist + len;
        q.emplace(d[kk], kk);
      }
    }
  }
  return d;
}

// min over t ∈ [0,1] of (1−t)da + t·db + |(1−t)ea + t·eb|_m, with |·|_m the node's metric.
double triangle_update(const InducedMetric& m, double h, int ai, int aj, double da, int bi, int bj,
                       double db) {
  const double ea1 = ai * h, ea2 = aj * h, w1 = (bi - ai) * h, w2 = (bj - aj) * h;
  const double A = quad(m, w1, w2);
  const double B = m.g11 * ea1 * w1 + m.g12 * (ea1 * w2 + ea2 * w1) + m.g22 * ea2 * w2;
  const double C = quad(m, ea1, ea2);
  auto f = [&](double t) { return da + t * (db - da) + std::sqrt(std::max(0.0, A * t * t + 2 * B * t + C)); };
  double best = std::min(da + std::sqrt(C), db + std::sqrt(std::max(0.0, A + 2 * B + C)));
  const double D = db - da, D2 = D * D;
  if (A > D2) {
    const double disc = D2 * std::max(0.0, A * C - B * B) / (A - D2);
    const double r = std::sqrt(disc);
    for (double t : {(-B + r) / A, (-B - r) / A})
      if (t > 0 && t < 1) best = std::min(best, f(t));
  }
  return best;
}

// Nodes next to the source get the distance of the frozen metric at the midpoint, which removes
// most of the first-order error the point source would otherwise feed into the sweeps.
std::vector<char> seed_source(const Grid& G, std::vector<double>& d) {
  std::vector<char> fixed(d.size(), 0);
  const int c = G.cells / 2;
  constexpr int reach = 3;
  for (int j = c - reach; j <= c + reach; ++j)
    for (int i = c - reach; i <= c + reach; ++i) {
      if (i < 0 || j < 0 || i >= G.n || j >= G.n) continue;
      const std::size_t k = G.index(i, j);
      if (!G.valid[k]) continue;
      const InducedMetric& a = G.metric[G.origin];
      const InducedMetric& b = G.metric[k];
      const InducedMetric mid{0.5 * (a.g11 + b.g11), 0.5 * (a.g12 + b.g12), 0.5 * (a.g22 + b.g22)};
      d[k] = G.h * std::sqrt(quad(mid, i - c, j - c));
      fixed[k] = 1;
    }
  return fixed;
}

void sweep(const Grid& G, std::vector<double>& d, const std::vector<char>& fixed) {
  double scale = 0;
  for (double v : d)
    if (std::isfinite(v)) scale = std::max(scale, v);
  const double stop = 1e-12 * std::max(scale, 1.0);
  for (int round = 0; round < 200; ++round) {
    double change = 0;
    for (int order = 0; order < 4; ++order) {
      const bool rev_i = order & 1, rev_j = order & 2;
      for (int jj = 0; jj < G.n; ++jj) {
        const int j = rev_j ? G.n - 1 - jj : jj;
        for (int ii = 0; ii < G.n; ++ii) {
          const int i = rev_i ? G.n - 1 - ii : ii;
          const std::size_t k = G.index(i, j);
          if (!G.valid[k] || fixed[k]) continue;
          const InducedMetric& m = G.metric[k];
          double best = d[k];
          for (int s = 0; s < 8; ++s) {
            const int t = (s + 1) % 8;
            const int ai = i + di[s], aj = j + dj[s], bi = i + di[t], bj = j + dj[t];
            const bool a_in = ai >= 0 && aj >= 0 && ai < G.n && aj < G.n && G.valid[G.index(ai, aj)];
            const bool b_in = bi >= 0 && bj >= 0 && bi < G.n && bj < G.n && G.valid[G.index(bi, bj)];
            const double da = a_in ? d[G.index(ai, aj)] : inf;
            const double db = b_in ? d[G.index(bi, bj)] : inf;
            if (std::isfinite(da) && std::isfinite(db))
              best = std::min(best, triangle_update(m, G.h, di[s], dj[s], da, di[t], dj[t], db));
            else if (std::isfinite(da))
              best = std::min(best, da + G.h * std::sqrt(quad(m, di[s], dj[s])));
            else if (std::isfinite(db))
              best = std::min(best, db + G.h * std::sqrt(quad(m, di[t], dj[t])));
          }
          if (best < d[k]) {
            change = std::max(change, d[k] == inf ? inf : d[k] - best);
            d[k] = best;
          }
        }
      }
    }
    if (change <= stop) return;
  }
  throw ConvergenceError("intrinsic distance sweeps did not settle");
}

DistanceField to_field(const Grid& G, std::vector<double> d) {
  DistanceField f;
  f.half_width = G.half_width;
  f.cells = G.cells;
  f.d = std::move(d);
  return f;
}

}  // namespace

DistanceField dijkstra_distance_field(const GraphSurface& g, double half_width, int cells) {
  const Grid G = make_grid(g, half_width, cells);
  return to_field(G, dijkstra(G));
}

DistanceField intrinsic_distance_field(const GraphSurface& g, double half_width, int cells) {
  const Grid G = make_grid(g, half_width, cells);
  std::vector<double> d = dijkstra(G);
  const std::vector<char> fixed = seed_source(G, d);
  sweep(G, d, fixed);
  return to_field(G, std::move(d));
}

double sublevel_area(const GraphSurface& g, const DistanceField& f, double R, int sub) {
  if (sub < 1) throw InvalidArgument("need at least one subsample per cell side");
  const double h = f.spacing();
  double total = 0;
  for (int j = 0; j < f.cells; ++j) {
    for (int i = 0; i < f.cells; ++i) {
      const double c[4] = {f.node(i, j), f.node(i + 1, j), f.node(i, j + 1), f.node(i + 1, j + 1)};
      const double lo = std::min({c[0], c[1], c[2], c[3]});
      if (!(lo <= R)) continue;
      const bool all_finite = std::isfinite(c[0]) && std::isfinite(c[1]) && std::isfinite(c[2]) &&
                              std::isfinite(c[3]);
      const BasePoint base = f.position(i, j);
      double cell = 0;
      for (int b = 0; b < sub; ++b) {
        for (int a = 0; a < sub; ++a) {
          const double s = (a + 0.5) / sub, t = (b + 0.5) / sub;
          double v;
          if (all_finite) {
            v = (1 - s) * (1 - t) * c[0] + s * (1 - t) * c[1] + (1 - s) * t * c[2] + s * t * c[3];
          } else {
            v = c[(s < 0.5 ? 0 : 1) + (t < 0.5 ? 0 : 2)];
          }
          if (!(v <= R)) continue;
          const BasePoint p{base.x + s * h, base.y + t * h};
          if (!all_finite && (!in_model(g.sp, p) || !g.domain.contains(p))) continue;
          const double l = lambda(g.sp, p);
          cell += graph_fields(g, p).w * l * l;
        }
      }
      total += cell * h * h / (sub * sub);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------------------------
// Region areas

namespace {

std::vector<AreaSample> intrinsic_areas(const GraphSurface& g, const std::vector<double>& radii,
                                        const RegionOptions& opts) {
  const double Rmax = *std::max_element(radii.begin(), radii.end());
  const double rho = model_radius_of(g.sp, Rmax);
  // The intrinsic ball projects into D_R; keep a margin of a few cells.
  double half = rho * 1.02;
  if (g.sp.kappa() < 0) half = std::min(half, 0.999999 * g.sp.model_radius());
  std::vector<double> prev;
  std::vector<AreaSample> out(radii.size());
  for (int cells = opts.intrinsic_cells;; cells *= 2) {
    const DistanceField f = intrinsic_distance_field(g, half, cells);
    std::vector<double> cur(radii.size());
    parallel_for(radii.size(), opts.threads,
                 [&](std::size_t i) { cur[i] = sublevel_area(g, f, radii[i]); });
    if (!prev.empty()) {
      bool ok = true;
      for (std::size_t i = 0; i < radii.size(); ++i) {
        out[i].R = radii[i];
        out[i].area = cur[i];
        out[i].error = std::abs(cur[i] - prev[i]);
        out[i].converged = out[i].error <= opts.intrinsic_rel_tol * std::abs(cur[i]);
        ok = ok && out[i].converged;
      }
      if (ok || 2 * cells > opts.intrinsic_max_cells) return out;
    }
    prev = cur;
  }
}

AreaSample quadrature_area(const GraphSurface& g, double R, const PolarRegion& region,
                           const QuadratureOptions& q) {
  const QuadratureResult r =
      integrate_polar(g.sp, [&g](BasePoint p) { return graph_fields(g, p).w; }, region, q);
  return {R, r.value, r.error, r.converged};
}

}  // namespace

std::vector<AreaSample> region_areas(const GraphSurface& g, RegionFamily family,
                                     const std::vector<double>& radii, const RegionOptions& opts) {
  if (radii.empty()) throw InvalidArgument("need at least one radius");
  for (double R : radii)
    if (!(R > 0) || !std::isfinite(R)) throw InvalidArgument("radii must be finite and > 0");
  if (family == RegionFamily::intrinsic) return intrinsic_areas(g, radii, opts);

  std::vector<AreaSample> out(radii.size());
  QuadratureOptions q = opts.quadrature;
  q.threads = 1;
  const PointE c = surface_center(g);
  parallel_for(radii.size(), opts.threads, [&](std::size_t i) {
    const double R = radii[i];
    if (family == RegionFamily::cylinder) {
      out[i] = quadrature_area(g, R, region_in_disk(g, R), q);
      return;
    }
    const BallSpec ball(g.sp, c, R);
    const double hb = ball_height_bound(g.sp, R);
    const double tol = opts.membership_tol;
    auto in = [&g, &ball, c, hb, tol](BasePoint p) {
      const double z = g.u(p);
      if (std::abs(z - c.z) > hb) return false;
      return in_ball(ball, PointE{p.x, p.y, z}, tol);
    };
    out[i] = quadrature_area(g, R, region_in_disk(g, R, in), q);
  });
  return out;
}

AreaSample region_area(const GraphSurface& g, RegionFamily family, double R,
                       const RegionOptions& opts) {
  return region_areas(g, family, {R}, opts).front();
}

// ---------------------------------------------------------------------------------------------
// Verdicts

Verdict growth_verdict(const GrowthFit& fit, const ExpectedGrowth& e,
                       const std::optional<ExpRemainderFit>& rem, const VerdictTolerances& tol,
                       std::string* note) {
  std::ostringstream msg;
  msg.precision(4);
  double value, se, rms;
  double lo, hi;
  if (e.model == GrowthModel::power) {
    value = fit.exponent();
    se = fit.power.slope_se;
    rms = fit.power.rms_residual;
    lo = e.order - tol.exponent;
    hi = e.order + tol.exponent;
    msg << "exponent " << value << " +- " << se;
  } else {
    value = rem ? rem->rate : fit.rate();
    se = rem ? 0.0 : fit.exponential.slope_se;
    rms = rem ? rem->rms_relative : fit.exponential.rms_residual;
    lo = e.order * (1 - tol.rate_relative);
    hi = e.order * (1 + tol.rate_relative);
    msg << "rate " << value << (rem ? " (exponential with linear remainder)" : "") << " +- " << se;
  }
  Verdict v;
  if (rms > tol.max_rms) {
    v = Verdict::inconclusive;
    msg << "; residual " << rms << " above " << tol.max_rms;
  } else {
    switch (e.kind) {
      case Expectation::exactly:
        v = (value >= lo && value <= hi) ? Verdict::consistent : Verdict::violated;
        msg << "; expected in [" << lo << ", " << hi << "]";
        break;
      case Expectation::at_most:
        v = (value - tol.sigmas * se <= hi) ? Verdict::consistent : Verdict::violated;
        msg << "; expected at most " << hi;
        break;
      case Expectation::at_least:
      default:
        v = (value + tol.sigmas * se >= lo) ? Verdict::consistent : Verdict::violated;
        msg << "; expected at least " << lo;
        break;
    }
  }
  msg << "; finite-radius fit, not a proof of the asymptotics";
  if (note) *note = msg.str();
  return v;
}

GrowthReport growth_report(const std::string& surface, const GraphSurface& g, RegionFamily family,
                           const std::vector<double>& radii, const ExpectedGrowth& expected,
                           const RegionOptions& opts, const VerdictTolerances& tol) {
  GrowthReport r;
  r.surface = surface;
  r.family = to_string(family);
  r.expected = expected;
  r.samples = region_areas(g, family, radii, opts);
  std::vector<double> values;
  for (const AreaSample& s : r.samples) values.push_back(s.area);
  r.fit = fit_growth(radii, values);
  if (expected.model == GrowthModel::exponential && expected.kind == Expectation::exactly &&
      radii.size() >= 5)
    r.remainder_fit = fit_exponential_remainder(radii, values);
  r.verdict = growth_verdict(*r.fit, expected, r.remainder_fit, tol, &r.note);
  for (const AreaSample& s : r.samples)
    if (!s.converged) {
      r.note += "; area at R=" + std::to_string(s.R) + " did not reach its tolerance";
    }
  return r;
}

// ---------------------------------------------------------------------------------------------

CalibrationResult calibration_check(const GraphSurface& g, double R, const QuadratureOptions& opts) {
  const PolarRegion region = region_in_disk(g, R);
  const auto a = integrate_polar(g.sp, [&g](BasePoint p) { return graph_fields(g, p).w; }, region,
                                 opts);
  const auto b = integrate_polar(
      g.sp, [&g](BasePoint p) { return graph_fields(g.sp, p, Gradient{}).w; }, region, opts);
  if (!a.converged || !b.converged)
    throw ConvergenceError("calibration areas did not converge", a.value - b.value);
  CalibrationResult c;
  c.area = a.value;
  c.umbrella_area = b.value;
  c.margin = a.value - b.value;
  c.error = a.error + b.error;
  const double rho = region.max_radius;
  const BasePoint o{0, 0};
  const double u0 = g.domain.contains(o) ? g.u(o) : 0.0;
  double dev = 0;
  for (int j = 0; j <= 40; ++j)
    for (int i = 0; i <= 40; ++i) {
      const BasePoint p{rho * (-1 + i / 20.0) * 0.999, rho * (-1 + j / 20.0) * 0.999};
      if (p.x * p.x + p.y * p.y >= rho * rho || !g.domain.contains(p)) continue;
      dev = std::max(dev, std::abs(g.u(p) - u0));
    }
  c.vertical_translate = dev <= 1e-12 * std::max(1.0, std::abs(u0));
  return c;
}

// ---------------------------------------------------------------------------------------------

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Points of a boundary arc inside the base disk of model radius rho.
std::vector<BasePoint> arc_points(const BoundaryArc& a, double rho, int n) {
  std::vector<BasePoint> out;
  std::visit(overloaded{
                 [&](const SegmentArc& s) {
                   const double reach = std::hypot(s.origin.x, s.origin.y) + rho;
                   const double t0 = std::max(s.t0, -reach), t1 = std::min(s.t1, reach);
                   for (int i = 0; i <= n; ++i) {
                     const double t = t0 + (t1 - t0) * i / n;
                     out.push_back({s.origin.x + t * s.direction.x, s.origin.y + t * s.direction.y});
                   }
                 },
                 [&](const CircleArc& c) {
                   for (int i = 0; i <= n; ++i) {
                     const double t = c.angle0 + (c.angle1 - c.angle0) * i / n;
                     out.push_back(
                         {c.center.x + c.radius * std::cos(t), c.center.y + c.radius * std::sin(t)});
                   }
                 },
             },
             a.geometry);
  std::erase_if(out, [rho](BasePoint p) { return p.x * p.x + p.y * p.y >= rho * rho; });
  return out;
}

}  // namespace

CollinKrustReport collin_krust_sweep(const GraphSurface& g, const std::vector<double>& radii,
                                     int rays, int steps, double boundary_tol) {
  if (radii.size() < 2) throw InvalidArgument("need at least two radii");
  if (!std::is_sorted(radii.begin(), radii.end()) || !(radii.front() > 0))
    throw InvalidArgument("radii must be positive and increasing");
  if (rays < 8 || steps < 8) throw InvalidArgument("sampling too coarse");
  CollinKrustReport rep;
  const double rho_max = model_radius_of(g.sp, radii.back());

  for (const BoundaryArc& a : g.domain.boundary) {
    if (a.values != BoundaryValues::finite) continue;
    for (const BasePoint& p : arc_points(a, rho_max, 4 * steps)) {
      double v;
      try {
        v = std::abs(g.u(p));
      } catch (const DomainError&) {
        continue;
      }
      rep.max_boundary_value = std::max(rep.max_boundary_value, v);
    }
  }
  if (rep.max_boundary_value > boundary_tol) {
    std::ostringstream m;
    m << "boundary values are not zero (max |u| on the sampled boundary is "
      << rep.max_boundary_value << ")";
    throw HypothesisError(m.str());
  }

  double overall = 0;
  for (double r : radii) {
    const double rho = model_radius_of(g.sp, r);
    CollinKrustRow row;
    row.r = r;
    int inside = 0;
    for (int k = 0; k < rays; ++k) {
      const double a = 2 * pi * (k + 0.5) / rays, c = std::cos(a), s = std::sin(a);
      for (int i = 1; i <= steps; ++i) {
        const double t = rho * (i == steps ? 1 - 1e-12 : static_cast<double>(i) / steps);
        const BasePoint p{t * c, t * s};
        if (!g.domain.contains(p)) continue;
        row.M = std::max(row.M, std::abs(g.u(p)));
      }
      if (g.domain.contains(BasePoint{rho * c, rho * s})) ++inside;
    }
    row.boundary_length = lambda(g.sp, BasePoint{rho, 0}) * rho * 2 * pi * inside / rays;
    overall = std::max(overall, row.M);
    rep.rows.push_back(row);
  }
  if (overall == 0) throw HypothesisError("u vanishes on the whole sample; it must be non-constant");

  const std::size_t half = rep.rows.size() / 2;
  rep.liminf_linear = inf;
  for (std::size_t i = half; i < rep.rows.size(); ++i)
    rep.liminf_linear = std::min(rep.liminf_linear, rep.rows[i].M / rep.rows[i].r);
  double early = 0, late = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    (i < half ? early : late) = std::max(i < half ? early : late, rep.rows[i].boundary_length);
  rep.bounded_boundary_length = late <= 1.05 * early;
  if (rep.bounded_boundary_length) {
    double q = inf;
    for (std::size_t i = half; i < rep.rows.size(); ++i)
      q = std::min(q, rep.rows[i].M / (rep.rows[i].r * rep.rows[i].r));
    rep.liminf_quadratic = q;
  }
  return rep;
}

// ---------------------------------------------------------------------------------------------
// The growth table

std::vector<std::string> table1_rows() {
  return {"umbrella-nil",       "umbrella-hyperbolic", "fmp",
          "ideal-scherk",       "k-noids",             "entire-nil",
          "entire-critical",    "entire-subcritical",  "entire-hyperbolic-minimal",
          "zero-boundary-r3",   "zero-boundary-nil",   "zero-boundary-hyperbolic"};
}

std::vector<GrowthReport> table1_suite(const std::vector<std::string>& rows,
                                       const Table1Options& opts) {
  const std::vector<std::string> all = table1_rows();
  const std::vector<std::string> wanted = rows.empty() ? all : rows;
  for (const std::string& r : wanted)
    if (std::find(all.begin(), all.end(), r) == all.end())
      throw InvalidArgument("unknown growth table row '" + r + "'");

  const std::vector<double> power = opts.quick ? std::vector<double>{2, 2.5, 3, 4, 5, 6}
                                               : std::vector<double>{2, 2.8, 4, 5.6, 8, 11.2};
  const std::vector<double> expo = opts.quick ? std::vector<double>{3, 3.5, 4, 4.5, 5, 5.5}
                                              : std::vector<double>{3, 4, 5, 6, 7, 8};
  const RegionOptions& ro = opts.region;
  using F = RegionFamily;
  auto pw = [](double order, Expectation k, std::string row) {
    return ExpectedGrowth{GrowthModel::power, order, k, std::move(row)};
  };
  auto ex = [](double order, Expectation k, std::string row) {
    return ExpectedGrowth{GrowthModel::exponential, order, k, std::move(row)};
  };
  auto missing = [](const std::string& name, const std::string& row, const std::string& why) {
    GrowthReport r;
    r.surface = name;
    r.family = "-";
    r.instantiable = false;
    r.expected.row = row;
    r.verdict = Verdict::inconclusive;
    r.note = "not instantiable: " + why;
    return r;
  };

  std::vector<GrowthReport> out;
  for (const std::string& row : wanted) {
    if (row == "umbrella-nil") {
      const auto s = umbrella(SpaceParams(0, 1));
      for (F f : {F::extrinsic, F::cylinder, F::intrinsic})
        out.push_back(growth_report("umbrella(0,1)", s.graph, f, power,
                                    pw(3, Expectation::exactly, row), ro));
    } else if (row == "umbrella-hyperbolic") {
      const auto s = umbrella(SpaceParams(-1, 1));
      for (F f : {F::extrinsic, F::cylinder})
        out.push_back(growth_report("umbrella(-1,1)", s.graph, f, expo,
                                    ex(1, Expectation::exactly, row), ro));
    } else if (row == "fmp") {
      const auto s = fmp_surface(1, 0);
      for (F f : {F::extrinsic, F::cylinder, F::intrinsic})
        out.push_back(growth_report("fmp(tau=1,theta=0)", s.graph, f, power,
                                    pw(3, Expectation::exactly, row), ro));
    } else if (row == "ideal-scherk") {
      out.push_back(missing("ideal Scherk graph", row, "no explicit formula is known"));
    } else if (row == "k-noids") {
      out.push_back(missing("k-noid", row, "no explicit formula is known"));
    } else if (row == "entire-nil") {
      const auto p = affine_plane(1, 1, 1);
      const auto s = fmp_surface(1, 0);
      out.push_back(growth_report("plane(tau=1,a=1,b=1)", p.graph, F::cylinder, power,
                                  pw(3, Expectation::at_least, row), ro));
      out.push_back(growth_report("plane(tau=1,a=1,b=1)", p.graph, F::extrinsic, power,
                                  pw(3, Expectation::at_most, row), ro));
      out.push_back(growth_report("fmp(tau=1,theta=0)", s.graph, F::cylinder, power,
                                  pw(3, Expectation::at_least, row), ro));
    } else if (row == "entire-critical") {
      out.push_back(missing("entire graph with 4H^2+kappa=0", row,
                            "no explicit non-trivial example with printed formula"));
    } else if (row == "entire-subcritical") {
      out.push_back(missing("entire graph with 4H^2+kappa<0", row,
                            "no explicit example with printed formula"));
    } else if (row == "entire-hyperbolic-minimal") {
      const auto s = umbrella(SpaceParams(-1, 1));
      out.push_back(growth_report("umbrella(-1,1)", s.graph, F::cylinder, expo,
                                  ex(1, Expectation::at_least, row), ro));
    } else if (row == "zero-boundary-r3") {
      const GraphSurface g(
          SpaceParams(0, 0), half_plane_domain(), [](BasePoint p) { return p.x; },
          [](BasePoint) { return Gradient{1, 0}; }, [](BasePoint) { return Hessian{}; });
      out.push_back(growth_report("halfplane x (R3)", g, F::extrinsic, power,
                                  pw(2, Expectation::at_most, row), ro));
    } else if (row == "zero-boundary-nil") {
      const auto s = catenoid(1, 1);
      out.push_back(growth_report("catenoid(E=1,tau=1)", s.graph, F::extrinsic, power,
                                  pw(3, Expectation::at_most, row), ro));
    } else if (row == "zero-boundary-hyperbolic") {
      const auto s = example_by_name("ideal-polygon", SpaceParams(-1, 1), {{"n", 2}});
      out.push_back(growth_report("zero graph over ideal quadrilateral", s.graph, F::extrinsic,
                                  expo, ex(1, Expectation::at_most, row), ro));
    }
  }
  return out;
}

}  // namespace ekt
