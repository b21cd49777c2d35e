#include "ekt/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "ekt/errors.hpp"

namespace ekt {

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidArgument("least_squares: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw InvalidArgument("least_squares: need at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0)) throw InvalidArgument("least_squares: abscissae are all equal");
  LinearFit f;
  f.n = n;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    ssr += r * r;
  }
  f.rms_residual = std::sqrt(ssr / n);
  if (n > 2) {
    const double s2 = ssr / (n - 2);
    f.slope_se = std::sqrt(s2 / sxx);
    f.intercept_se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  }
  return f;
}

std::string to_string(GrowthModel m) {
  return m == GrowthModel::power ? "power" : "exponential";
}

namespace {

void check_series(const std::vector<double>& radii, const std::vector<double>& values,
                  std::size_t min_points) {
  if (radii.size() != values.size()) throw InvalidArgument("radii and values differ in length");
  if (radii.size() < min_points)
    throw InvalidArgument("growth fit needs at least " + std::to_string(min_points) + " radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0) || !std::isfinite(radii[i]))
      throw InvalidArgument("growth fit radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw InvalidArgument("growth fit radii must be increasing");
    if (!(values[i] > 0) || !std::isfinite(values[i]))
      throw InvalidArgument("growth fit values must be positive and finite");
  }
}

}  // namespace

GrowthFit fit_growth(const std::vector<double>& radii, const std::vector<double>& values,
                     std::size_t min_points) {
  check_series(radii, values, min_points);
  GrowthFit g;
  g.radii = radii;
  g.values = values;
  std::vector<double> lr(radii.size()), lv(values.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    lr[i] = std::log(radii[i]);
    lv[i] = std::log(values[i]);
  }
  g.power = least_squares(lr, lv);
  g.exponential = least_squares(radii, lv);
  g.preferred =
      g.power.rms_residual <= g.exponential.rms_residual ? GrowthModel::power : GrowthModel::exponential;
  g.selection = "smaller rms log-residual (power " + std::to_string(g.power.rms_residual) +
                ", exponential " + std::to_string(g.exponential.rms_residual) + ")";
  return g;
}

namespace {

// Weighted least squares for v ≈ A e^{bR} + p + qR with weights 1/v, by Householder QR.
struct RemainderSolve {
  double coef[3];
  double ssr;
};

RemainderSolve solve_remainder(const std::vector<double>& R, const std::vector<double>& v,
                               double b) {
  const std::size_t n = R.size();
  std::vector<std::array<double, 4>> M(n);
  for (std::size_t i = 0; i < n; ++i) M[i] = {std::exp(b * R[i]) / v[i], 1.0 / v[i], R[i] / v[i], 1.0};
  for (int j = 0; j < 3; ++j) {
    double norm = 0;
    for (std::size_t i = j; i < n; ++i) norm += M[i][j] * M[i][j];
    norm = std::sqrt(norm);
    if (norm == 0) continue;
    const double alpha = M[j][j] > 0 ? -norm : norm;
    std::vector<double> u(n, 0.0);
    for (std::size_t i = j; i < n; ++i) u[i] = M[i][j];
    u[j] -= alpha;
    double un = 0;
    for (std::size_t i = j; i < n; ++i) un += u[i] * u[i];
    if (un == 0) continue;
    for (int c = j; c < 4; ++c) {
      double s = 0;
      for (std::size_t i = j; i < n; ++i) s += u[i] * M[i][c];
      s = 2 * s / un;
      for (std::size_t i = j; i < n; ++i) M[i][c] -= s * u[i];
    }
  }
  RemainderSolve out{};
  for (int j = 2; j >= 0; --j) {
    double s = M[j][3];
    for (int c = j + 1; c < 3; ++c) s -= M[j][c] * out.coef[c];
    out.coef[j] = M[j][j] != 0 ? s / M[j][j] : 0.0;
  }
  out.ssr = 0;
  for (std::size_t i = 3; i < n; ++i) out.ssr += M[i][3] * M[i][3];
  return out;
}

}  // namespace

ExpRemainderFit fit_exponential_remainder(const std::vector<double>& radii,
                                          const std::vector<double>& values, double rate_lo,
                                          double rate_hi) {
  check_series(radii, values, 5);
  if (!(rate_lo > 0) || !(rate_hi > rate_lo)) throw InvalidArgument("bad rate search interval");
  auto objective = [&](double b) { return solve_remainder(radii, values, b).ssr; };
  constexpr int scan = 400;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= scan; ++i) {
    const double b = rate_lo + (rate_hi - rate_lo) * i / scan;
    const double v = objective(b);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double step = (rate_hi - rate_lo) / scan;
  const double lo = std::max(rate_lo, rate_lo + (best - 1) * step);
  const double hi = std::min(rate_hi, rate_lo + (best + 1) * step);
  const auto r = boost::math::tools::brent_find_minima(objective, lo, hi, 52);
  const RemainderSolve s = solve_remainder(radii, values, r.first);
  ExpRemainderFit f;
  f.rate = r.first;
  f.prefactor = s.coef[0];
  f.constant = s.coef[1];
  f.linear = s.coef[2];
  f.rms_relative = std::sqrt(s.ssr / radii.size());
  return f;
}

}  // namespace ekt
