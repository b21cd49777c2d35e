#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ekt/cli.hpp"
#include "ekt/errors.hpp"

namespace ekt::cli {

namespace {

using K = ParamKind;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string normalize(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

double parse_double(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  double x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() || !std::isfinite(x))
    throw InvalidArgument("'" + key + "' expects a finite number, got '" + v + "'");
  return x;
}

template <class Int>
Int parse_int(const std::string& key, const std::string& v) {
  const std::string s = trim(v);
  Int x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw InvalidArgument("'" + key + "' expects an integer, got '" + v + "'");
  return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  if (out.empty()) throw InvalidArgument("'" + key + "' expects a comma-separated list");
  return out;
}

void check_value(const ParamSpec& p, const std::string& v) {
  switch (p.kind) {
    case K::number: parse_double(p.name, v); break;
    case K::integer: parse_int<std::int64_t>(p.name, v); break;
    case K::seed: parse_int<std::uint64_t>(p.name, v); break;
    case K::list: parse_list(p.name, v); break;
    case K::choice:
      if (std::find(p.choices.begin(), p.choices.end(), v) == p.choices.end()) {
        std::string all;
        for (const auto& c : p.choices) all += (all.empty() ? "" : ", ") + c;
        throw InvalidArgument("'" + p.name + "' must be one of " + all + ", got '" + v + "'");
      }
      break;
    case K::text: break;
  }
}

const std::vector<std::string> kExamples{"umbrella", "plane", "fmp", "catenoid", "ideal-polygon",
                                         "poly"};

// Parameters of the example registry and of polynomial graphs.
std::vector<ParamSpec> surface_params(const std::string& default_example) {
  return {
      {"example", K::choice, default_example, "surface name", kExamples},
      {"a", K::number, "", "plane: slope in x"},
      {"b", K::number, "", "plane: slope in y"},
      {"theta", K::number, "", "fmp: rotation angle"},
      {"E", K::number, "", "catenoid: neck radius"},
      {"r_max", K::number, "", "catenoid: outer radius"},
      {"n", K::number, "", "ideal-polygon: half the number of vertices"},
      {"poly", K::text, "", "poly: terms c:i:j separated by commas, u = sum c x^i y^j"},
      {"domain", K::choice, "plane", "poly: base domain",
       {"plane", "half-plane", "disk", "annulus", "wedge"}},
      {"domain_r", K::number, "1", "poly: disk radius or annulus inner radius"},
      {"domain_r2", K::number, "", "poly: annulus outer radius (default unbounded)"},
      {"wedge_angle", K::number, "1.5707963267948966", "poly: wedge opening angle"},
  };
}

std::vector<ParamSpec> with(std::vector<ParamSpec> a, const std::vector<ParamSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

const std::vector<ParamSpec>& common_params() {
  static const std::vector<ParamSpec> p{
      {"kappa", K::number, "0", "base curvature, <= 0"},
      {"tau", K::number, "1", "bundle curvature, >= 0"},
      {"format", K::choice, "csv", "output format", {"csv", "json"}},
      {"out", K::text, "", "output file (default stdout)"},
      {"threads", K::integer, "", "worker threads (default $EKT_THREADS, else hardware)"},
  };
  return p;
}

const std::vector<ParamSpec>& command_params(const std::string& command) {
  static const std::map<std::string, std::vector<ParamSpec>> table{
      {"geodesic",
       {
           {"family", K::choice, "nil", "geodesic family",
            {"nil", "sl2-horizontal", "sl2-elliptic", "sl2-parabolic", "sl2-hyperbolic", "product",
             "numeric"}},
           {"method", K::choice, "auto", "closed form or ODE integration",
            {"auto", "closed", "numeric"}},
           {"phi", K::number, "1.0471975511965976", "polar angle of the initial direction"},
           {"theta", K::number, "0", "azimuth of the initial direction"},
           {"a", K::number, "0", "S~L2 elliptic/hyperbolic family parameter"},
           {"x0", K::number, "0", "start x"},
           {"y0", K::number, "0", "start y"},
           {"z0", K::number, "0", "start z"},
           {"t_end", K::number, "10", "final time"},
           {"step", K::number, "0.1", "sample spacing (rounded so the grid ends at t_end)"},
           {"tol", K::number, "1e-10", "ODE tolerance"},
       }},
      {"ball-volume",
       {
           {"radii", K::list, "1,2,3,4,5,6", "ball radii"},
           {"samples", K::integer, "100000", "Monte Carlo samples per radius"},
           {"seed", K::seed, "1", "random seed"},
           {"cx", K::number, "0", "center x"},
           {"cy", K::number, "0", "center y"},
           {"cz", K::number, "0", "center z"},
       }},
      {"growth", with(surface_params("umbrella"),
                      {
                          {"family", K::choice, "extrinsic", "region family",
                           {"intrinsic", "extrinsic", "cylinder"}},
                          {"radii", K::list, "", "radii (default depends on kappa)"},
                          {"model", K::choice, "", "expected model", {"power", "exponential"}},
                          {"order", K::number, "", "expected exponent or rate"},
                          {"expect", K::choice, "exactly", "kind of expectation",
                           {"exactly", "at_most", "at_least"}},
                          {"cells", K::integer, "128", "intrinsic grid: initial cells"},
                          {"max_cells", K::integer, "512", "intrinsic grid: maximum cells"},
                          {"rel_tol", K::number, "0.01", "intrinsic grid: refinement tolerance"},
                      })},
      {"collin-krust", with(surface_params("catenoid"),
                            {
                                {"radii", K::list, "4,8,16,32", "increasing radii"},
                                {"rays", K::integer, "256", "rays per circle"},
                                {"steps", K::integer, "400", "boundary samples per arc"},
                                {"boundary_tol", K::number, "1e-6", "allowed |u| on the boundary"},
                            })},
      {"growth-table",
       {
           {"rows", K::text, "", "comma-separated rows (default all)"},
           {"quick", K::choice, "0", "fewer radii", {"0", "1"}},
           {"cells", K::integer, "128", "intrinsic grid: initial cells"},
           {"max_cells", K::integer, "512", "intrinsic grid: maximum cells"},
           {"rel_tol", K::number, "0.01", "intrinsic grid: refinement tolerance"},
       }},
  };
  const auto it = table.find(command);
  if (it == table.end()) throw InvalidArgument("unknown command '" + command + "'");
  return it->second;
}

std::vector<std::string> command_names() {
  return {"geodesic", "ball-volume", "growth", "collin-krust", "growth-table"};
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = normalize(trim(line.substr(0, eq)));
    if (key.empty()) throw InvalidArgument(path + ":" + std::to_string(lineno) + ": empty key");
    if (out.count(key))
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

RunConfig RunConfig::build(const std::string& command,
                           const std::vector<std::map<std::string, std::string>>& sources) {
  RunConfig c;
  c.command_ = command;
  command_params(command);
  for (const auto& src : sources)
    for (const auto& [k, v] : src) {
      const std::string key = normalize(k);
      const ParamSpec& p = c.spec(key);
      check_value(p, v);
      c.values_[key] = v;
    }
  for (const auto* list : {&common_params(), &command_params(command)})
    for (const ParamSpec& p : *list)
      if (!c.values_.count(p.name) && !p.fallback.empty()) c.values_[p.name] = p.fallback;
  return c;
}

const ParamSpec& RunConfig::spec(const std::string& key) const {
  for (const auto* list : {&common_params(), &command_params(command_)})
    for (const ParamSpec& p : *list)
      if (p.name == key) return p;
  throw InvalidArgument("unknown key '" + key + "' for command " + command_);
}

bool RunConfig::has(const std::string& key) const {
  spec(key);
  return values_.count(key) > 0;
}

namespace {
const std::string& require(const std::map<std::string, std::string>& m, const std::string& key) {
  const auto it = m.find(key);
  if (it == m.end()) throw InvalidArgument("missing value for '" + key + "'");
  return it->second;
}
}  // namespace

double RunConfig::number(const std::string& key) const {
  spec(key);
  return parse_double(key, require(values_, key));
}

std::int64_t RunConfig::integer(const std::string& key) const {
  spec(key);
  return parse_int<std::int64_t>(key, require(values_, key));
}

std::uint64_t RunConfig::seed(const std::string& key) const {
  spec(key);
  return parse_int<std::uint64_t>(key, require(values_, key));
}

std::vector<double> RunConfig::list(const std::string& key) const {
  spec(key);
  return parse_list(key, require(values_, key));
}

std::string RunConfig::text(const std::string& key) const {
  spec(key);
  return require(values_, key);
}

nlohmann::ordered_json RunConfig::echo() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto* params : {&common_params(), &command_params(command_)})
    for (const ParamSpec& p : *params) {
      if (p.name == "threads" || p.name == "format" || p.name == "out") continue;
      if (!values_.count(p.name)) continue;
      switch (p.kind) {
        case K::number: j[p.name] = number(p.name); break;
        case K::integer: j[p.name] = integer(p.name); break;
        case K::seed: j[p.name] = seed(p.name); break;
        case K::list: j[p.name] = list(p.name); break;
        case K::choice:
        case K::text: j[p.name] = text(p.name); break;
      }
    }
  return j;
}

}  // namespace ekt::cli
