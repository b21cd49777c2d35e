#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ekt {

struct LinearFit {
  double slope = 0, intercept = 0;
  double slope_se = 0, intercept_se = 0;
  double rms_residual = 0;
  std::size_t n = 0;
};

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

enum class GrowthModel { power, exponential };
std::string to_string(GrowthModel m);

// A·e^{bR} + p + qR, the shape of an exponential leading term with a linear remainder.
struct ExpRemainderFit {
  double rate = 0, prefactor = 0, constant = 0, linear = 0;
  double rms_relative = 0;
};

struct GrowthFit {
  std::vector<double> radii, values;
  LinearFit power;        // log v against log R; slope is the exponent
  LinearFit exponential;  // log v against R; slope is the rate
  GrowthModel preferred = GrowthModel::power;
  std::string selection;  // how `preferred` was chosen

  double exponent() const { return power.slope; }
  double rate() const { return exponential.slope; }
};

// Fits both models and reports which has the smaller log-residual.
GrowthFit fit_growth(const std::vector<double>& radii, const std::vector<double>& values,
                     std::size_t min_points = 3);

ExpRemainderFit fit_exponential_remainder(const std::vector<double>& radii,
                                          const std::vector<double>& values,
                                          double rate_lo = 0.05, double rate_hi = 5.0);

}  // namespace ekt
