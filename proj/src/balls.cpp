#include "ekt/balls.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ekt/geodesics.hpp"
#include "ekt/parallel.hpp"

namespace ekt {

namespace {
constexpr double pi = std::numbers::pi;
constexpr std::uint64_t chunk_size = 1 << 15;

double unit_uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
}  // namespace

BallSpec::BallSpec(const SpaceParams& s, const PointE& c, double r) : sp(s), center(c), radius(r) {
  if (!(radius > 0) || !std::isfinite(radius)) throw InvalidArgument("ball radius must be > 0");
  require_in_model(sp, center.base());
  if (!std::isfinite(center.z)) throw InvalidArgument("ball center must be finite");
}

double model_radius_of(const SpaceParams& sp, double R) {
  if (sp.kappa() == 0.0) return R;
  return (2.0 / sp.k()) * std::tanh(0.5 * sp.k() * R);
}

double base_disk_area(const SpaceParams& sp, double R) {
  if (sp.kappa() == 0.0) return pi * R * R;
  const double s = std::sinh(0.5 * sp.k() * R);
  return 4.0 * pi * s * s / (-sp.kappa());
}

double ball_height_bound(const SpaceParams& sp, double R) {
  if (sp.kappa() < 0.0) return sl2_max_height_bound(sp, R);
  if (sp.tau() == 0.0) return R;
  return nil_max_height(sp.tau(), R);
}

BoundingCylinder bounding_cylinder(const SpaceParams& sp, double R) {
  if (!(R > 0)) throw InvalidArgument("R must be > 0");
  BoundingCylinder c;
  c.disk_radius = R;
  c.model_radius = model_radius_of(sp, R);
  c.half_height = ball_height_bound(sp, R);
  c.volume = base_disk_area(sp, R) * 2.0 * c.half_height;
  return c;
}

namespace {

// Position of p relative to the center, when an isometry to the origin is available.
bool to_center_frame(const BallSpec& b, const PointE& p, PointE& out) {
  const SpaceParams& sp = b.sp;
  if (sp.kappa() == 0.0) {
    out = nil_multiply(sp.tau(), nil_inverse(b.center), p);
    return true;
  }
  if (sp.tau() == 0.0) {
    const BasePoint q = base_translate_inverse(sp, b.center.base(), p.base());
    out = {q.x, q.y, p.z - b.center.z};
    return true;
  }
  if (b.center.x == 0.0 && b.center.y == 0.0 && b.center.z == 0.0) {
    out = p;
    return true;
  }
  return false;
}

Membership origin_membership(const SpaceParams& sp, double R, double h, const PointE& q,
                             double tol) {
  const double rb = std::hypot(q.x, q.y);
  if (std::abs(q.z) >= h) return Membership::outside;
  if (sp.kappa() == 0.0) {
    if (rb >= R) return Membership::outside;
    const double d = nil_distance_from_origin(sp.tau(), q, tol);
    return d < R ? Membership::inside : Membership::outside;
  }
  if (rb >= model_radius_of(sp, R)) return Membership::outside;
  const DistanceResult d = distance(sp, {0, 0, 0}, q, tol);
  if (d.upper < R) return Membership::inside;
  if (d.lower >= R) return Membership::outside;
  return Membership::undetermined;
}

}  // namespace

Membership ball_membership(const BallSpec& ball, const PointE& p, double tol) {
  require_in_model(ball.sp, p.base());
  PointE q;
  if (to_center_frame(ball, p, q))
    return origin_membership(ball.sp, ball.radius, ball_height_bound(ball.sp, ball.radius), q,
                             tol);
  const DistanceResult d = distance(ball.sp, ball.center, p, tol);
  if (d.upper < ball.radius) return Membership::inside;
  if (d.lower >= ball.radius) return Membership::outside;
  return Membership::undetermined;
}

bool in_ball(const BallSpec& ball, const PointE& p, double tol) {
  const Membership m = ball_membership(ball, p, tol);
  if (m == Membership::undetermined)
    throw ConvergenceError("ball membership undetermined (distance only bracketed)");
  return m == Membership::inside;
}

namespace {

struct Counts {
  std::uint64_t inside = 0, undetermined = 0;
};

Counts sample_counts(const BallSpec& ball, std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (n < 1000) throw InvalidArgument("mc_volume needs at least 1000 samples");
  const SpaceParams& sp = ball.sp;
  const double R = ball.radius;
  const BoundingCylinder cyl = bounding_cylinder(sp, R);
  const std::uint64_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<Counts> per(chunks);
  const double k = sp.k();
  const double sh = sp.kappa() < 0 ? std::sinh(0.5 * k * R) : 0.0;
  parallel_for(chunks, threads, [&](std::size_t c) {
    std::mt19937_64 g(stream_seed(seed, c));
    const std::uint64_t begin = c * chunk_size;
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk_size);
    Counts local;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double u = unit_uniform(g), v = unit_uniform(g), w = unit_uniform(g);
      double rho;
      if (sp.kappa() == 0.0) {
        rho = R * std::sqrt(u);
      } else {
        // Inverse CDF of the hyperbolic area sinh²(k r / 2), mapped to the model radius.
        const double r = (2.0 / k) * std::asinh(std::sqrt(u) * sh);
        rho = (2.0 / k) * std::tanh(0.5 * k * r);
      }
      const double ang = 2.0 * pi * v;
      const PointE q{rho * std::cos(ang), rho * std::sin(ang), cyl.half_height * (2.0 * w - 1.0)};
      switch (origin_membership(sp, R, cyl.half_height, q, 1e-12)) {
        case Membership::inside: ++local.inside; break;
        case Membership::undetermined: ++local.undetermined; break;
        case Membership::outside: break;
      }
    }
    per[c] = local;
  });
  Counts total;
  for (const Counts& c : per) {
    total.inside += c.inside;
    total.undetermined += c.undetermined;
  }
  return total;
}

VolumeEstimate make_estimate(std::uint64_t hits, std::uint64_t n, double bounding) {
  VolumeEstimate e;
  e.samples = n;
  e.hits = hits;
  e.bounding_volume = bounding;
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  e.value = p * bounding;
  e.std_error = bounding * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return e;
}

}  // namespace

VolumeEstimate mc_volume(const BallSpec& ball, std::uint64_t n, std::uint64_t seed,
                         unsigned threads) {
  const Counts c = sample_counts(ball, n, seed, threads);
  VolumeEstimate e = make_estimate(c.inside, n, bounding_cylinder(ball).volume);
  e.failures = c.undetermined;
  if (static_cast<double>(c.undetermined) > 0.01 * static_cast<double>(n))
    throw ConvergenceError("more than 1% of samples had undetermined membership", e.value);
  return e;
}

VolumeBracket mc_volume_bracket(const BallSpec& ball, std::uint64_t n, std::uint64_t seed,
                                unsigned threads) {
  const Counts c = sample_counts(ball, n, seed, threads);
  const double bv = bounding_cylinder(ball).volume;
  VolumeBracket b;
  b.lower = make_estimate(c.inside, n, bv);
  b.upper = make_estimate(c.inside + c.undetermined, n, bv);
  b.lower.failures = b.upper.failures = c.undetermined;
  return b;
}

GrowthFit volume_growth_fit(const std::vector<double>& radii,
                            const std::vector<VolumeEstimate>& volumes) {
  std::vector<double> v;
  v.reserve(volumes.size());
  for (const auto& e : volumes) v.push_back(e.value);
  return fit_growth(radii, v, 6);
}

}  // namespace ekt
