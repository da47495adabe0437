#include "radii/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <string>

#include "curve_index.hpp"
#include "radii/errors.hpp"

namespace radii {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kE = std::numbers::e;
// k in the rational target function 1 + z(k+z)/(k(k-z)).
constexpr double kRationalK = kSqrt2 + 1.0;

constexpr std::size_t kPolylinePoints = 4096;
// Below this distance to the coarse polyline, curve membership switches from
// the winding number to a side test against the exact parameterization.
constexpr double kNearCurve = 1e-4;
constexpr double kOnCurve = 1e-12;
constexpr double kRayTolerance = 1e-13;
constexpr double kRayLimit = 1e6;

const double kSin1 = std::sin(1.0);

void require_finite(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw Error(ErrorKind::DomainError, "complex value must be finite");
  }
}

[[noreturn]] void out_of_window(const Region& region, double center) {
  throw Error(ErrorKind::OutOfWindow,
              "center " + std::to_string(center) + " outside the inclusion window for " +
                  std::string(region.name()));
}

// Exact boundary parameterizations for the two image-defined regions.
Complex sine_curve(double theta) { return 1.0 + std::sin(std::polar(1.0, theta)); }

Complex sine_tangent(double theta) {
  const Complex z = std::polar(1.0, theta);
  return std::cos(z) * Complex(0.0, 1.0) * z;
}

Complex rational_curve(double theta) {
  const Complex z = std::polar(1.0, theta);
  return 1.0 + z * (kRationalK + z) / (kRationalK * (kRationalK - z));
}

Complex rational_tangent(double theta) {
  const Complex z = std::polar(1.0, theta);
  const Complex k = kRationalK;
  const Complex dpsi = (k * k + 2.0 * k * z - z * z) / (k * (k - z) * (k - z));
  return dpsi * Complex(0.0, 1.0) * z;
}

bool is_curve_kind(RegionKind kind) {
  return kind == RegionKind::Sine || kind == RegionKind::Rational;
}

Complex curve_point(RegionKind kind, double theta) {
  return kind == RegionKind::Sine ? sine_curve(theta) : rational_curve(theta);
}

Complex curve_tangent(RegionKind kind, double theta) {
  return kind == RegionKind::Sine ? sine_tangent(theta) : rational_tangent(theta);
}

double grid_theta(std::size_t i, std::size_t n) {
  return 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
}

template <typename Curve>
std::pair<double, double> golden_minimize(Curve&& distance, double lo, double hi) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = distance(c), fd = distance(d);
  for (int it = 0; it < 200 && (b - a) > 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = distance(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = distance(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

struct SampledBoundary {
  std::vector<double> theta;
  std::vector<Complex> points;
};

SampledBoundary sample_boundary(const Region& region, std::size_t n) {
  SampledBoundary out;
  out.theta.reserve(n);
  out.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = grid_theta(i, n);
    try {
      out.points.push_back(boundary_point(region, theta));
      out.theta.push_back(theta);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoBoundaryOnRay) throw;
    }
  }
  return out;
}

const detail::CurveIndex& curve_index(RegionKind kind) {
  static const detail::CurveIndex sine = [] {
    std::vector<Complex> pts(kPolylinePoints);
    for (std::size_t i = 0; i < kPolylinePoints; ++i) pts[i] = sine_curve(grid_theta(i, kPolylinePoints));
    return detail::CurveIndex(std::move(pts), kNearCurve);
  }();
  static const detail::CurveIndex rational = [] {
    std::vector<Complex> pts(kPolylinePoints);
    for (std::size_t i = 0; i < kPolylinePoints; ++i) {
      pts[i] = rational_curve(grid_theta(i, kPolylinePoints));
    }
    return detail::CurveIndex(std::move(pts), kNearCurve);
  }();
  return kind == RegionKind::Sine ? sine : rational;
}

// Cached 4096-point samples for every region without a free parameter.
const SampledBoundary& cached_boundary(RegionKind kind) {
  static const auto cache = [] {
    std::array<std::unique_ptr<SampledBoundary>, 10> all;
    for (RegionKind k : all_region_kinds()) {
      if (k == RegionKind::StarlikeOrder) continue;
      all[static_cast<std::size_t>(k)] =
          std::make_unique<SampledBoundary>(sample_boundary(Region::of(k), kPolylinePoints));
    }
    return all;
  }();
  return *cache[static_cast<std::size_t>(kind)];
}

BoundaryProximity refine_nearest(const Region& region, const SampledBoundary& samples,
                                 Complex w) {
  const auto& pts = samples.points;
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = std::abs(pts[i] - w);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  const double step = 2.0 * kPi / static_cast<double>(kPolylinePoints);
  const double center = samples.theta[best];
  auto distance = [&](double theta) {
    try {
      return std::abs(boundary_point(region, theta) - w);
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  auto [theta, d] = golden_minimize(distance, center - step, center + step);
  if (!(d < best_d)) return {center, pts[best], best_d};
  return {theta, boundary_point(region, theta), d};
}

bool curve_contains(RegionKind kind, Complex w) {
  const detail::CurveIndex& index = curve_index(kind);
  if (!index.near_distance(w)) return index.winding_number(w) != 0;

  // Close to the boundary: resolve the foot point on the exact curve and
  // decide the side from the (counter-clockwise) tangent.
  const auto& pts = index.vertices();
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = std::abs(pts[i] - w);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  const double step = 2.0 * kPi / static_cast<double>(pts.size());
  const double center = grid_theta(best, pts.size());
  auto distance = [&](double theta) { return std::abs(curve_point(kind, theta) - w); };
  auto [theta, d] = golden_minimize(distance, center - step, center + step);
  if (best_d < d) {
    theta = center;
    d = best_d;
  }
  if (d < kOnCurve) return false;
  const Complex diff = w - curve_point(kind, theta);
  const Complex tangent = curve_tangent(kind, theta);
  return tangent.real() * diff.imag() - tangent.imag() * diff.real() > 0.0;
}

}  // namespace

Region Region::starlike(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::DomainError, "alpha must satisfy 0 <= alpha < 1");
  }
  return Region(RegionKind::StarlikeOrder, alpha);
}

Region Region::of(RegionKind kind) {
  if (kind == RegionKind::StarlikeOrder) {
    throw Error(ErrorKind::DomainError, "starlike region requires an explicit alpha");
  }
  return Region(kind, 0.0);
}

double Region::delta() const noexcept {
  switch (kind_) {
    case RegionKind::StarlikeOrder: return 1.0 - alpha_;
    case RegionKind::Lemniscate: return kSqrt2 - 1.0;
    case RegionKind::Parabolic: return 0.5;
    case RegionKind::Exponential: return 1.0 - 1.0 / kE;
    case RegionKind::Cardioid: return 2.0 / 3.0;
    case RegionKind::Sine: return kSin1;
    case RegionKind::Lune: return 2.0 - kSqrt2;
    case RegionKind::Rational: return 3.0 - 2.0 * kSqrt2;
    case RegionKind::Nephroid: return 2.0 / 3.0;
    case RegionKind::Sigmoid: return (kE - 1.0) / (kE + 1.0);
  }
  return 0.0;
}

MembershipMethod Region::membership_method() const noexcept {
  return is_curve_kind(kind_) ? MembershipMethod::WindingNumber : MembershipMethod::ClosedForm;
}

std::string_view Region::name() const noexcept { return to_string(kind_); }

std::string_view to_string(RegionKind kind) noexcept {
  switch (kind) {
    case RegionKind::StarlikeOrder: return "starlike";
    case RegionKind::Lemniscate: return "lemniscate";
    case RegionKind::Parabolic: return "parabolic";
    case RegionKind::Exponential: return "exponential";
    case RegionKind::Cardioid: return "cardioid";
    case RegionKind::Sine: return "sine";
    case RegionKind::Lune: return "lune";
    case RegionKind::Rational: return "rational";
    case RegionKind::Nephroid: return "nephroid";
    case RegionKind::Sigmoid: return "sigmoid";
  }
  return "?";
}

std::optional<RegionKind> parse_region_kind(std::string_view name) noexcept {
  for (RegionKind kind : all_region_kinds()) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

const std::array<RegionKind, 10>& all_region_kinds() noexcept {
  static constexpr std::array<RegionKind, 10> kinds{
      RegionKind::StarlikeOrder, RegionKind::Lemniscate, RegionKind::Parabolic,
      RegionKind::Exponential,   RegionKind::Cardioid,   RegionKind::Sine,
      RegionKind::Lune,          RegionKind::Rational,   RegionKind::Nephroid,
      RegionKind::Sigmoid};
  return kinds;
}

bool contains(const Region& region, Complex w) {
  require_finite(w);
  const double u = w.real();
  const double v = w.imag();
  switch (region.kind()) {
    case RegionKind::StarlikeOrder:
      return u > region.alpha();
    case RegionKind::Lemniscate:
      // The left lobe of |w^2 - 1| < 1 is not part of the image of sqrt(1+z).
      return u > 0.0 && std::abs(w * w - 1.0) < 1.0;
    case RegionKind::Parabolic:
      return u > std::abs(w - 1.0);
    case RegionKind::Exponential:
      if (u <= 0.0) return false;
      return std::abs(std::log(w)) < 1.0;
    case RegionKind::Cardioid: {
      // (9u^2+9v^2-18u+5)^2 - 16(9u^2+9v^2-6u+1) written about the cusp 1/3,
      // so the cusp itself evaluates to exactly zero.
      const double x = u - 1.0 / 3.0;
      const double rho2 = 9.0 * (x * x + v * v);
      const double a = rho2 - 12.0 * x;
      return a * a - 16.0 * rho2 < 0.0;
    }
    case RegionKind::Sine:
    case RegionKind::Rational:
      return curve_contains(region.kind(), w);
    case RegionKind::Lune:
      // Mirror component about the imaginary axis excluded.
      return u > 0.0 && std::abs(w * w - 1.0) < 2.0 * std::abs(w);
    case RegionKind::Nephroid: {
      const double t = (u - 1.0) * (u - 1.0) + v * v - 4.0 / 9.0;
      return t * t * t - (4.0 / 3.0) * v * v < 0.0;
    }
    case RegionKind::Sigmoid: {
      if (u == 2.0 && v == 0.0) return false;
      const Complex ratio = w / (2.0 - w);
      if (ratio.imag() == 0.0 && ratio.real() <= 0.0) return false;
      return std::abs(std::log(ratio)) < 1.0;
    }
  }
  return false;
}

double inclusion_radius(const Region& region, double center) {
  const double c = center;
  if (!std::isfinite(c)) throw Error(ErrorKind::DomainError, "center must be finite");
  switch (region.kind()) {
    case RegionKind::StarlikeOrder:
      if (!(c > region.alpha())) out_of_window(region, c);
      return c - region.alpha();
    case RegionKind::Lemniscate:
      if (!(c > 2.0 * kSqrt2 / 3.0 && c < kSqrt2)) out_of_window(region, c);
      return kSqrt2 - c;
    case RegionKind::Parabolic:
      if (!(c > 0.5 && c < 1.5)) out_of_window(region, c);
      return c - 0.5;
    case RegionKind::Exponential:
      if (!(c >= 1.0 / kE && c <= (kE + 1.0 / kE) / 2.0)) out_of_window(region, c);
      return c - 1.0 / kE;
    case RegionKind::Cardioid:
      if (!(c > 1.0 / 3.0 && c <= 5.0 / 3.0)) out_of_window(region, c);
      return (3.0 * c - 1.0) / 3.0;
    case RegionKind::Sine:
      if (!(std::abs(c - 1.0) <= kSin1)) out_of_window(region, c);
      return kSin1 - std::abs(c - 1.0);
    case RegionKind::Lune:
      if (!(c > kSqrt2 - 1.0 && c <= kSqrt2 + 1.0)) out_of_window(region, c);
      return 1.0 - std::abs(kSqrt2 - c);
    case RegionKind::Rational:
      if (!(c > 2.0 * (kSqrt2 - 1.0) && c <= kSqrt2)) out_of_window(region, c);
      return c - 2.0 * (kSqrt2 - 1.0);
    case RegionKind::Nephroid:
      if (!(c >= 1.0 && c < 5.0 / 3.0)) out_of_window(region, c);
      return 5.0 / 3.0 - c;
    case RegionKind::Sigmoid:
      if (!(c > 2.0 / (1.0 + kE) && c < 2.0 * kE / (1.0 + kE))) out_of_window(region, c);
      return (kE - 1.0) / (kE + 1.0) - std::abs(c - 1.0);
  }
  out_of_window(region, c);
}

Complex boundary_point(const Region& region, double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::DomainError, "theta must be finite");
  if (is_curve_kind(region.kind())) return curve_point(region.kind(), theta);

  // Every region is starlike with respect to 1, so the ray meets the boundary once.
  const Complex dir = std::polar(1.0, theta);
  double inside = 0.0;
  double outside = 1.0 / 1024.0;
  while (contains(region, 1.0 + outside * dir)) {
    inside = outside;
    outside *= 2.0;
    if (outside > kRayLimit) {
      throw Error(ErrorKind::NoBoundaryOnRay,
                  std::string(region.name()) + " region is unbounded along this ray");
    }
  }
  while (outside - inside > kRayTolerance) {
    const double mid = 0.5 * (inside + outside);
    if (mid <= inside || mid >= outside) break;
    (contains(region, 1.0 + mid * dir) ? inside : outside) = mid;
  }
  return 1.0 + 0.5 * (inside + outside) * dir;
}

bool winding_membership(std::span<const Complex> boundary_samples, Complex w) {
  require_finite(w);
  if (boundary_samples.size() < kMinWindingSamples) {
    throw Error(ErrorKind::DomainError, "winding membership needs at least 4096 boundary samples");
  }
  const std::size_t n = boundary_samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (detail::point_segment_distance(w, boundary_samples[i], boundary_samples[(i + 1) % n]) <
        1e-9) {
      throw Error(ErrorKind::TooCloseToBoundary, "point within 1e-9 of the boundary polyline");
    }
  }
  const std::vector<Complex> vertices(boundary_samples.begin(), boundary_samples.end());
  const int wn = detail::winding_number(vertices, w);
  return wn == 1 || wn == -1;
}

std::vector<Complex> boundary_polyline(const Region& region, std::size_t points,
                                       std::size_t* skipped) {
  SampledBoundary samples = sample_boundary(region, points);
  if (skipped != nullptr) *skipped = points - samples.points.size();
  return std::move(samples.points);
}

BoundaryProximity nearest_boundary_point(const Region& region, Complex w) {
  require_finite(w);
  if (region.kind() == RegionKind::StarlikeOrder) {
    return {w.imag() >= 0.0 ? kPi / 2.0 : 3.0 * kPi / 2.0, Complex(region.alpha(), w.imag()),
            std::abs(w.real() - region.alpha())};
  }
  return refine_nearest(region, cached_boundary(region.kind()), w);
}

std::size_t write_boundary_csv(std::ostream& out, const Region& region, std::size_t points) {
  out << "theta,re,im\n";
  std::size_t skipped = 0;
  char line[96];
  for (std::size_t i = 0; i < points; ++i) {
    const double theta = grid_theta(i, points);
    Complex w;
    try {
      w = boundary_point(region, theta);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoBoundaryOnRay) throw;
      ++skipped;
      continue;
    }
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", theta, w.real(), w.imag());
    out << line;
  }
  return skipped;
}

}  // namespace radii
