#include "radii/radii.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "radii/bounds.hpp"
#include "theorem_equations.hpp"

namespace radii {

namespace {

constexpr std::size_t kScanCells = 4096;
constexpr std::size_t kMaxScanCells = 65536;

// Independent solve for the generic condition: each generic condition is
// monotone in r, so one coarse scan and plain bisection suffice.
constexpr std::size_t kGenericScan = 1000;
constexpr double kGenericTolerance = 1e-14;

bool sign_change(double a, double b) { return (a < 0.0) != (b < 0.0); }

double generic_root(const Region& region, const ClassParams& params) {
  auto f = [&](double r) { return generic_condition(region, params, r); };
  const double hi_end = kRootIntervalHi;
  double lo = 0.0, hi = 0.0;
  double f_lo = 0.0;
  bool found = false;
  double prev_x = hi_end / kGenericScan;
  double prev_f = f(prev_x);
  if (prev_f == 0.0) return prev_x;
  for (std::size_t i = 2; i <= kGenericScan; ++i) {
    const double x = hi_end * static_cast<double>(i) / kGenericScan;
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (sign_change(prev_f, fx)) {
      lo = prev_x;
      hi = x;
      f_lo = prev_f;
      found = true;
      break;
    }
    prev_x = x;
    prev_f = fx;
  }
  if (!found) {
    // A root below the first scan point: bisect on (0, first point] instead.
    const double first = hi_end / kGenericScan;
    const double near_zero = f(first * 1e-9);
    if (!sign_change(near_zero, f(first))) {
      throw Error(ErrorKind::NoRoot, "generic condition has no root in (0,1)");
    }
    lo = first * 1e-9;
    hi = first;
    f_lo = near_zero;
  }
  while (hi - lo > kGenericTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign_change(f_lo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

double region_alpha(const Region& region) {
  return region.kind() == RegionKind::StarlikeOrder ? region.alpha() : 0.0;
}

}  // namespace

const Polynomial& TheoremEquation::polynomial() const {
  if (const auto* p = std::get_if<Polynomial>(&impl_)) return *p;
  throw Error(ErrorKind::WrongVariant, "equation is not a polynomial");
}

double TheoremEquation::operator()(double r) const {
  if (const auto* p = std::get_if<Polynomial>(&impl_)) return (*p)(r);
  return std::get<Function>(impl_)(r);
}

double TheoremEquation::scale() const noexcept {
  if (const auto* p = std::get_if<Polynomial>(&impl_)) return 1.0 + p->max_abs_coeff();
  return scale_;
}

TheoremEquation theorem_equation(const Region& region, const ClassParams& params) {
  const double alpha = region_alpha(region);
  if (region.kind() == RegionKind::StarlikeOrder && params.kind() == ClassKind::H2) {
    const double m = params.m(), n = params.n(), q = params.q();
    return TheoremEquation(
        [m, n, q, alpha](double r) { return detail::starlike_h2_equation(m, n, q, alpha, r); },
        // magnitude of the rational terms near r = 0
        1.0 + 4.0 + 1.0 + 2.0 + 2.0 + 2.0);
  }
  return TheoremEquation(detail::stated_polynomial(region.kind(), params, alpha));
}

double generic_condition(const Region& region, const ClassParams& params, double r) {
  if (params.kind() == ClassKind::H2) {
    if (region.kind() == RegionKind::StarlikeOrder) {
      return refined_h2_lower(params, r).value - region.alpha();
    }
    if (region.kind() == RegionKind::Parabolic) {
      return refined_h2_lower(params, r).value - disc_bound(params, r);
    }
  }
  return disc_bound(params, r) - region.delta();
}

double smallest_root(const std::function<double(double)>& eq, double lo, double hi,
                     double tol) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw Error(ErrorKind::DomainError, "root interval must be finite with lo < hi");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainError, "tolerance must be positive");

  for (std::size_t cells = kScanCells; cells <= kMaxScanCells; cells *= 4) {
    const double width = (hi - lo) / static_cast<double>(cells);
    double a = lo;
    double fa = eq(a);
    for (std::size_t i = 1; i <= cells; ++i) {
      const double b = i == cells ? hi : lo + width * static_cast<double>(i);
      const double fb = eq(b);
      if (fb == 0.0 && i < cells) return b;
      if (sign_change(fa, fb)) {
        double x0 = a, x1 = b, f0 = fa, f1 = fb;
        while (x1 - x0 > tol) {
          const double mid = 0.5 * (x0 + x1);
          if (mid <= x0 || mid >= x1) break;
          const double fm = eq(mid);
          if (fm == 0.0) return mid;
          if (sign_change(f0, fm)) {
            x1 = mid;
            f1 = fm;
          } else {
            x0 = mid;
            f0 = fm;
          }
        }
        // Secant step inside the final bracket; stays within tol of the root.
        const double x = x0 - f0 * (x1 - x0) / (f1 - f0);
        return (x >= x0 && x <= x1) ? x : 0.5 * (x0 + x1);
      }
      a = b;
      fa = fb;
    }
  }
  throw Error(ErrorKind::NoRoot, "no sign change of the equation in the interval");
}

double smallest_root(const TheoremEquation& eq, double lo, double hi, double tol) {
  return smallest_root([&eq](double r) { return eq(r); }, lo, hi, tol);
}

std::string_view to_string(RadiusMethod method) noexcept {
  switch (method) {
    case RadiusMethod::PolynomialRoot: return "PolynomialRoot";
    case RadiusMethod::GenericBisection: return "GenericBisection";
    case RadiusMethod::TranscendentalBisection: return "TranscendentalBisection";
  }
  return "?";
}

bool sharp_claimed(RegionKind region, ClassKind cls) noexcept {
  if (cls != ClassKind::H2) return true;
  switch (region) {
    case RegionKind::Parabolic:
    case RegionKind::Exponential:
    case RegionKind::Cardioid:
    case RegionKind::Lune:
    case RegionKind::Rational:
      return false;
    default:
      return true;
  }
}

bool is_flagged_pair(RegionKind region, ClassKind cls) noexcept {
  return (region == RegionKind::Parabolic && cls == ClassKind::H2) ||
         (region == RegionKind::Nephroid && cls == ClassKind::H3);
}

RadiusResult compute_radius(const Region& region, const ClassParams& params, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    throw Error(ErrorKind::DomainError, "tol must lie in [1e-14, 1e-6]");
  }
  const TheoremEquation eq = theorem_equation(region, params);
  const double generic = generic_root(region, params);
  const bool flagged = is_flagged_pair(region.kind(), params.kind());

  RadiusResult out{region, params, 0.0, RadiusMethod::PolynomialRoot, 0.0, 0.0,
                   sharp_claimed(region.kind(), params.kind()), true, flagged};

  if (region.kind() == RegionKind::Nephroid && params.kind() == ClassKind::H3) {
    // The stated polynomial has q fixed at 2, so the generic condition decides.
    out.method = RadiusMethod::GenericBisection;
    out.radius = generic;
    out.residual = generic_condition(region, params, generic);
    out.cross_check_discrepancy = std::abs(smallest_root(eq, 0.0, kRootIntervalHi, tol) - generic);
  } else {
    out.method = eq.is_polynomial() ? RadiusMethod::PolynomialRoot
                                    : RadiusMethod::TranscendentalBisection;
    out.radius = smallest_root(eq, 0.0, kRootIntervalHi, tol);
    out.residual = eq(out.radius);
    out.cross_check_discrepancy = std::abs(out.radius - generic);
  }
  if (params.kind() == ClassKind::H2 && (region.kind() == RegionKind::StarlikeOrder ||
                                          region.kind() == RegionKind::Parabolic)) {
    out.justified_flag = out.radius < 1.0 / 3.0;
  }
  return out;
}

std::vector<TableEntry> radius_table(std::span<const Region> regions,
                                     std::span<const ClassParams> params, double tol,
                                     unsigned threads) {
  if (regions.empty() || params.empty()) {
    throw Error(ErrorKind::DomainError, "radius table needs at least one region and one parameter set");
  }
  std::vector<TableEntry> out;
  out.reserve(regions.size() * params.size());
  for (const Region& region : regions) {
    for (const ClassParams& p : params) out.push_back(TableEntry{region, p, std::nullopt, std::nullopt, {}});
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      TableEntry& entry = out[i];
      try {
        entry.result = compute_radius(entry.region, entry.params, tol);
      } catch (const Error& e) {
        entry.error_kind = e.kind();
        entry.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, out.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return out;
}

}  // namespace radii
