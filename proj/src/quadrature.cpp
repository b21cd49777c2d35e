#include "ekt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "ekt/errors.hpp"
#include "ekt/parallel.hpp"

namespace ekt {

namespace {
constexpr double pi = std::numbers::pi;

GaussRule make_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        double q0 = 1, q1 = x;
        for (int k = 2; k <= n; ++k) {
          const double q2 = ((2 * k - 1) * x * q1 - (k - 1) * q0) / k;
          q0 = q1;
          q1 = q2;
        }
        const double d = n * (x * q1 - q0) / (x * x - 1);
        r.x[i] = x;
        r.w[i] = 2 / ((1 - x * x) * d * d);
        break;
      }
    }
  }
  return r;
}

// Smoothstep substitution: integrable endpoint singularities of order 1/√ become bounded.
double panel_integral(const std::function<double(double)>& g, double a, double b,
                      const GaussRule& rule) {
  double s = 0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double t = 0.5 * (rule.x[i] + 1);
    const double x = a + (b - a) * t * t * (3 - 2 * t);
    const double dx = (b - a) * 6 * t * (1 - t);
    s += rule.w[i] * 0.5 * g(x) * dx;
  }
  return s;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex m;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

std::vector<std::pair<double, double>> find_segments(const std::function<bool(double)>& pred,
                                                     double a, double b, int n, double tol) {
  std::vector<std::pair<double, double>> out;
  if (!(b > a)) return out;
  auto edge = [&](double lo, double hi, bool lo_in) {
    while (hi - lo > tol * std::max(1.0, std::abs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (pred(mid) == lo_in)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  double prev = a;
  bool prev_in = pred(a);
  double start = a;
  for (int i = 1; i <= n; ++i) {
    const double x = a + (b - a) * i / n;
    const bool in = pred(x);
    if (in != prev_in) {
      const double e = edge(prev, x, prev_in);
      if (prev_in)
        out.emplace_back(start, e);
      else
        start = e;
    }
    prev = x;
    prev_in = in;
  }
  if (prev_in) out.emplace_back(start, b);
  return out;
}

QuadratureResult integrate_polar(const SpaceParams& sp, const std::function<double(BasePoint)>& f,
                                 const PolarRegion& region, const QuadratureOptions& opts) {
  if (!(region.max_radius > region.min_radius) || region.min_radius < 0)
    throw InvalidArgument("polar region needs 0 <= min_radius < max_radius");
  if (sp.kappa() < 0 && region.max_radius > sp.model_radius())
    throw DomainError("polar region leaves the model disk");
  const GaussRule& rule = gauss_legendre(10);
  const double kap = sp.kappa();

  std::vector<double> breaks = region.angular_breaks;
  for (double& b : breaks) b = std::remainder(b, 2 * pi);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto ray_integral = [&](double ang, int level) {
    const double c = std::cos(ang), s = std::sin(ang);
    auto at = [&](double r) { return BasePoint{r * c, r * s}; };
    auto pred = [&](double r) { return !region.contains || region.contains(at(r)); };
    // For κ < 0 the panels live in the intrinsic radius s, r = (2/k) tanh(ks/2), where the
    // weight λ² r dr = sinh(ks)/k ds has no blow-up at the rim of the model disk.
    const double k = std::sqrt(std::max(0.0, -kap));
    auto g = [&](double x) {
      if (k == 0) return f(at(x)) * x;
      return f(at(2 / k * std::tanh(0.5 * k * x))) * std::sinh(k * x) / k;
    };
    auto to_var = [&](double r) { return k == 0 ? r : 2 / k * std::atanh(0.5 * k * r); };
    const auto segs = find_segments(pred, region.min_radius, region.max_radius,
                                    opts.radial_scan << level, opts.bisect_tol);
    const int panels = 1 << level;
    double sum = 0;
    for (auto [a, b] : segs) {
      a = to_var(a);
      b = to_var(b);
      for (int p = 0; p < panels; ++p) {
        const double pa = a + (b - a) * p / panels, pb = a + (b - a) * (p + 1) / panels;
        sum += panel_integral(g, pa, pb, rule);
      }
    }
    return sum;
  };

  auto level_value = [&](int level) {
    std::vector<double> angles, weights;
    if (breaks.empty()) {
      const int n = opts.angular << level;
      for (int i = 0; i < n; ++i) {
        angles.push_back(2 * pi * (i + 0.5) / n);
        weights.push_back(2 * pi / n);
      }
    } else {
      const std::size_t nb = breaks.size();
      const int per = std::max(1, (opts.angular << level) / static_cast<int>(nb * rule.x.size()));
      for (std::size_t k = 0; k < nb; ++k) {
        const double a = breaks[k];
        const double b = (k + 1 < nb) ? breaks[k + 1] : breaks[0] + 2 * pi;
        for (int p = 0; p < per; ++p) {
          const double pa = a + (b - a) * p / per, pb = a + (b - a) * (p + 1) / per;
          for (std::size_t i = 0; i < rule.x.size(); ++i) {
            angles.push_back(0.5 * (pa + pb) + 0.5 * (pb - pa) * rule.x[i]);
            weights.push_back(0.5 * (pb - pa) * rule.w[i]);
          }
        }
      }
    }
    std::vector<double> vals(angles.size());
    parallel_for(angles.size(), opts.threads,
                 [&](std::size_t i) { vals[i] = ray_integral(angles[i], level); });
    double total = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) total += weights[i] * vals[i];
    return total;
  };

  QuadratureResult res;
  double prev = level_value(0);
  for (int level = 1; level <= opts.max_levels; ++level) {
    const double cur = level_value(level);
    res.value = cur;
    res.error = std::abs(cur - prev);
    res.levels = level;
    if (res.error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(cur))) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  return res;
}

}  // namespace ekt
