#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ekt/balls.hpp"
#include "ekt/cli.hpp"
#include "ekt/geodesics.hpp"
#include "ekt/growth.hpp"
#include "ekt/surfaces.hpp"

namespace ekt::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double inf = std::numeric_limits<double>::infinity();

SpaceParams space(const RunConfig& c) { return SpaceParams(c.number("kappa"), c.number("tau")); }

struct Term {
  double c;
  int i, j;
};

std::vector<Term> parse_poly(const std::string& s) {
  std::vector<Term> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Term t{};
    char c1 = 0, c2 = 0;
    std::istringstream is(item);
    if (!(is >> t.c >> c1 >> t.i >> c2 >> t.j) || c1 != ':' || c2 != ':' || t.i < 0 || t.j < 0 ||
        !(is >> std::ws).eof())
      throw InvalidArgument("poly term '" + item + "' is not of the form c:i:j");
    out.push_back(t);
  }
  if (out.empty()) throw InvalidArgument("poly needs at least one term");
  return out;
}

double pw(double x, int n) { return n <= 0 ? 1.0 : std::pow(x, n); }

GraphSurface poly_graph(const RunConfig& c) {
  if (!c.has("poly")) throw InvalidArgument("example poly needs the 'poly' key");
  const std::vector<Term> terms = parse_poly(c.text("poly"));
  const std::string d = c.text("domain");
  BaseDomain dom = full_plane();
  if (d == "half-plane") dom = half_plane_domain();
  if (d == "disk") dom = disk_domain(c.number("domain_r"));
  if (d == "annulus")
    dom = annulus_domain(c.number("domain_r"), c.has("domain_r2") ? c.number("domain_r2") : inf);
  if (d == "wedge") dom = wedge_domain(c.number("wedge_angle"));
  auto u = [terms](BasePoint p) {
    double s = 0;
    for (const Term& t : terms) s += t.c * pw(p.x, t.i) * pw(p.y, t.j);
    return s;
  };
  auto grad = [terms](BasePoint p) {
    Gradient g;
    for (const Term& t : terms) {
      if (t.i > 0) g.ux += t.c * t.i * pw(p.x, t.i - 1) * pw(p.y, t.j);
      if (t.j > 0) g.uy += t.c * t.j * pw(p.x, t.i) * pw(p.y, t.j - 1);
    }
    return g;
  };
  auto hess = [terms](BasePoint p) {
    Hessian h;
    for (const Term& t : terms) {
      if (t.i > 1) h.uxx += t.c * t.i * (t.i - 1) * pw(p.x, t.i - 2) * pw(p.y, t.j);
      if (t.i > 0 && t.j > 0) h.uxy += t.c * t.i * t.j * pw(p.x, t.i - 1) * pw(p.y, t.j - 1);
      if (t.j > 1) h.uyy += t.c * t.j * (t.j - 1) * pw(p.x, t.i) * pw(p.y, t.j - 2);
    }
    return h;
  };
  return GraphSurface(space(c), std::move(dom), u, grad, hess);
}

struct Surface {
  std::string name;
  GraphSurface graph;
  std::optional<ExampleSurface> example;
};

Surface surface(const RunConfig& c) {
  const std::string name = c.text("example");
  if (name == "poly") return {"poly(" + c.text("poly") + ")", poly_graph(c), std::nullopt};
  std::map<std::string, double> params;
  for (const char* k : {"a", "b", "theta", "E", "r_max", "n"})
    if (c.has(k)) params[k] = c.number(k);
  ExampleSurface e = example_by_name(name, space(c), params);
  return {e.name, e.graph, e};
}

json fit_json(const GrowthFit& f) {
  return json{{"preferred", to_string(f.preferred)},
              {"selection", f.selection},
              {"exponent", f.exponent()},
              {"exponent_se", f.power.slope_se},
              {"power_rms", f.power.rms_residual},
              {"rate", f.rate()},
              {"rate_se", f.exponential.slope_se},
              {"exponential_rms", f.exponential.rms_residual}};
}

json remainder_json(const ExpRemainderFit& r) {
  return json{{"rate", r.rate},
              {"prefactor", r.prefactor},
              {"constant", r.constant},
              {"linear", r.linear},
              {"rms_relative", r.rms_relative}};
}

json report_json(const GrowthReport& r) {
  json j{{"surface", r.surface},
         {"family", r.family},
         {"instantiable", r.instantiable},
         {"expected",
          {{"model", to_string(r.expected.model)},
           {"order", r.expected.order},
           {"kind", to_string(r.expected.kind)},
           {"row", r.expected.row}}}};
  json samples = json::array();
  for (const AreaSample& s : r.samples)
    samples.push_back({{"R", s.R}, {"area", s.area}, {"error", s.error}, {"converged", s.converged}});
  j["samples"] = samples;
  j["fit"] = r.fit ? fit_json(*r.fit) : json(nullptr);
  j["remainder_fit"] = r.remainder_fit ? remainder_json(*r.remainder_fit) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["note"] = r.note;
  return j;
}

RegionOptions region_options(const RunConfig& c, unsigned threads) {
  RegionOptions o;
  o.intrinsic_cells = static_cast<int>(c.integer("cells"));
  o.intrinsic_max_cells = static_cast<int>(c.integer("max_cells"));
  o.intrinsic_rel_tol = c.number("rel_tol");
  o.threads = threads;
  return o;
}

// ---------------------------------------------------------------------------------------------

FrameVector polar_direction(double phi, double theta) {
  return {std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta), std::cos(phi)};
}

Output cmd_geodesic(const RunConfig& c) {
  const SpaceParams sp = space(c);
  const std::string fam = c.text("family");
  const PointE start{c.number("x0"), c.number("y0"), c.number("z0")};
  const double phi = c.number("phi"), theta = c.number("theta"), a = c.number("a");
  if (fam == "nil" || fam == "numeric" || fam == "product")
    if (!(phi >= 0 && phi <= std::numbers::pi))
      throw InvalidArgument("phi must lie in [0, pi]");

  GeodesicSpec spec;
  if (fam == "nil") {
    spec = nil_spec(sp.tau(), phi, theta, start);
  } else if (fam == "product") {
    spec = product_spec(sp, polar_direction(phi, theta), start);
  } else if (fam == "numeric") {
    spec = GeodesicSpec{start, polar_direction(phi, theta), family::Numeric{}};
  } else {
    GeodesicFamily f = family::Sl2Horizontal{};
    if (fam == "sl2-elliptic") f = family::Sl2Elliptic{a};
    if (fam == "sl2-parabolic") f = family::Sl2Parabolic{};
    if (fam == "sl2-hyperbolic") f = family::Sl2Hyperbolic{a};
    spec = sl2_spec(sp, f);
    spec.start = start;
  }
  validate(sp, spec);

  std::string method = c.text("method");
  if (method == "auto") method = has_closed_form(spec) ? "closed" : "numeric";
  if (method == "closed" && !has_closed_form(spec))
    throw InvalidArgument("family '" + fam + "' has no closed form; use method=numeric");

  const double t_end = c.number("t_end"), step = c.number("step"), tol = c.number("tol");
  if (!(t_end > 0)) throw InvalidArgument("t_end must be > 0");
  if (!(step > 0)) throw InvalidArgument("step must be > 0");
  if (!(tol > 0)) throw InvalidArgument("tol must be > 0");
  const double steps = std::ceil(t_end / step - 1e-9);
  if (steps > 1e6) throw InvalidArgument("more than 10^6 samples requested");
  const std::size_t n = static_cast<std::size_t>(std::max(1.0, steps));

  auto closed_curve = [&](double s) {
    const GeodesicSample g = closed_form_sample(sp, spec, s);
    return CurvePoint{g.point, frame_to_coord(sp, g.point, g.velocity)};
  };

  std::vector<GeodesicSample> samples;
  std::vector<double> residual;
  if (method == "closed") {
    for (std::size_t i = 0; i <= n; ++i) {
      const double t = t_end * static_cast<double>(i) / static_cast<double>(n);
      samples.push_back(closed_form_sample(sp, spec, t));
      residual.push_back(ode_residual(sp, closed_curve, t));
    }
  } else {
    samples = integrate_geodesic(sp, spec, t_end, tol, n + 1);
    for (const GeodesicSample& s : samples) {
      if (!has_closed_form(spec)) {
        residual.push_back(nan);
        continue;
      }
      const PointE q = closed_form_sample(sp, spec, s.t).point;
      residual.push_back(std::sqrt(std::pow(s.point.x - q.x, 2) + std::pow(s.point.y - q.y, 2) +
                                   std::pow(s.point.z - q.z, 2)));
    }
  }

  Output out;
  out.columns = {"t", "x", "y", "z", "a1", "a2", "a3", "speed_drift", "residual"};
  double max_res = 0, max_drift = 0, a3_drift = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const GeodesicSample& s = samples[i];
    const double drift = std::abs(s.velocity.norm() - 1);
    max_drift = std::max(max_drift, drift);
    if (std::isfinite(residual[i])) max_res = std::max(max_res, residual[i]);
    if (sp.kappa() == 0 || sp.tau() == 0)
      a3_drift = std::max(a3_drift, std::abs(s.velocity.a3 - samples[0].velocity.a3));
    out.rows.push_back({s.t, s.point.x, s.point.y, s.point.z, s.velocity.a1, s.velocity.a2,
                        s.velocity.a3, drift, residual[i]});
  }
  out.doc = json{{"command", "geodesic"},
                 {"config", c.echo()},
                 {"family", family_name(spec.family)},
                 {"method", method},
                 {"summary",
                  {{"max_speed_drift", max_drift},
                   {"max_residual", max_res},
                   {"max_a3_drift", (sp.kappa() == 0 || sp.tau() == 0) ? json(a3_drift)
                                                                         : json(nullptr)}}}};
  return out;
}

Output cmd_ball_volume(const RunConfig& c, unsigned threads) {
  const SpaceParams sp = space(c);
  const std::vector<double> radii = c.list("radii");
  const std::int64_t samples = c.integer("samples");
  if (samples < 1000) throw InvalidArgument("samples must be >= 1000");
  const std::uint64_t seed = c.seed("seed");
  const PointE center{c.number("cx"), c.number("cy"), c.number("cz")};

  Output out;
  out.columns = {"R", "volume", "std_err", "bounding_volume"};
  std::vector<VolumeEstimate> vols;
  json extra = json::array();
  for (double R : radii) {
    const VolumeEstimate v =
        mc_volume(BallSpec(sp, center, R), static_cast<std::uint64_t>(samples), seed, threads);
    vols.push_back(v);
    out.rows.push_back({R, v.value, v.std_error, v.bounding_volume});
    extra.push_back({{"R", R},
                     {"hits", v.hits},
                     {"samples", v.samples},
                     {"undetermined", v.failures}});
  }
  out.doc = json{{"command", "ball-volume"}, {"config", c.echo()}, {"counts", extra}};
  if (radii.size() >= 6) {
    const GrowthFit f = volume_growth_fit(radii, vols);
    out.doc["fit"] = fit_json(f);
    out.csv_trailer.push_back(
        {std::string("exponent"), f.exponent(), f.power.slope_se, std::string()});
  } else {
    out.doc["fit"] = nullptr;
  }
  return out;
}

Output cmd_growth(const RunConfig& c, unsigned threads) {
  const SpaceParams sp = space(c);
  const Surface s = surface(c);
  const RegionFamily fam = parse_region_family(c.text("family"));
  const bool hyperbolic = sp.kappa() < 0;

  std::vector<double> radii = hyperbolic ? std::vector<double>{3, 4, 5, 6, 7, 8}
                                         : std::vector<double>{2, 2.8, 4, 5.6, 8, 11.2};
  if (c.has("radii")) radii = c.list("radii");
  ExpectedGrowth e;
  e.model = hyperbolic ? GrowthModel::exponential : GrowthModel::power;
  if (c.has("model"))
    e.model = c.text("model") == "power" ? GrowthModel::power : GrowthModel::exponential;
  e.order = e.model == GrowthModel::exponential ? sp.k() : (sp.tau() == 0 ? 2.0 : 3.0);
  if (c.has("order")) e.order = c.number("order");
  const std::string k = c.text("expect");
  e.kind = k == "exactly" ? Expectation::exactly
                          : (k == "at_most" ? Expectation::at_most : Expectation::at_least);
  e.row = "user";

  const GrowthReport r =
      growth_report(s.name, s.graph, fam, radii, e, region_options(c, threads));

  Output out;
  out.columns = {"R", "area", "error", "converged"};
  std::function<double(double)> closed;
  if (s.example && s.example->closed_forms.count("area") &&
      (fam != RegionFamily::intrinsic || s.example->intrinsic_equals_extrinsic)) {
    closed = s.example->closed_forms.at("area");
    out.columns.push_back("closed_form");
  }
  for (const AreaSample& a : r.samples) {
    std::vector<Cell> row{a.R, a.area, a.error, a.converged};
    if (closed) row.push_back(closed(a.R));
    out.rows.push_back(row);
  }
  out.doc = json{{"command", "growth"}, {"config", c.echo()}, {"report", report_json(r)}};
  return out;
}

Output cmd_collin_krust(const RunConfig& c) {
  const Surface s = surface(c);
  const CollinKrustReport r =
      collin_krust_sweep(s.graph, c.list("radii"), static_cast<int>(c.integer("rays")),
                         static_cast<int>(c.integer("steps")), c.number("boundary_tol"));
  Output out;
  out.columns = {"r", "M", "M_over_r", "boundary_length"};
  for (const CollinKrustRow& row : r.rows)
    out.rows.push_back({row.r, row.M, row.M / row.r, row.boundary_length});
  out.doc = json{{"command", "collin-krust"},
                 {"config", c.echo()},
                 {"surface", s.name},
                 {"summary",
                  {{"liminf_linear", r.liminf_linear},
                   {"bounded_boundary_length", r.bounded_boundary_length},
                   {"liminf_quadratic",
                    r.liminf_quadratic ? json(*r.liminf_quadratic) : json(nullptr)},
                   {"max_boundary_value", r.max_boundary_value}}}};
  return out;
}

Output cmd_growth_table(const RunConfig& c, unsigned threads) {
  std::vector<std::string> rows;
  if (c.has("rows")) {
    std::stringstream ss(c.text("rows"));
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) rows.push_back(item);
  }
  Table1Options o;
  o.region = region_options(c, threads);
  o.quick = c.text("quick") == "1";
  const std::vector<GrowthReport> reps = table1_suite(rows, o);

  Output out;
  out.columns = {"row", "surface", "family", "instantiable", "exponent", "rate", "expected",
                 "verdict", "note"};
  json all = json::array();
  for (const GrowthReport& r : reps) {
    std::ostringstream exp;
    exp << to_string(r.expected.kind) << " " << to_string(r.expected.model) << " "
        << r.expected.order;
    out.rows.push_back({r.expected.row, r.surface, r.family, r.instantiable,
                        r.fit ? r.fit->exponent() : nan, r.fit ? r.fit->rate() : nan,
                        r.instantiable ? exp.str() : std::string(), to_string(r.verdict), r.note});
    all.push_back(report_json(r));
  }
  out.doc = json{{"command", "growth-table"}, {"config", c.echo()}, {"reports", all}};
  return out;
}

}  // namespace

Output run_command(const RunConfig& cfg, unsigned threads) {
  const std::string& cmd = cfg.command();
  if (cmd == "geodesic") return cmd_geodesic(cfg);
  if (cmd == "ball-volume") return cmd_ball_volume(cfg, threads);
  if (cmd == "growth") return cmd_growth(cfg, threads);
  if (cmd == "collin-krust") return cmd_collin_krust(cfg);
  if (cmd == "growth-table") return cmd_growth_table(cfg, threads);
  throw InvalidArgument("unknown command '" + cmd + "'");
}

}  // namespace ekt::cli
