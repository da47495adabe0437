#include "radii/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "radii/bounds.hpp"
#include "radii/errors.hpp"
#include "radii/extremal.hpp"
#include "radii/radii.hpp"

namespace radii {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kCirclePoints = 720;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kLemmaSlack = 1e-12;
constexpr double kSampleRadius = 0.95;

using Clock = std::chrono::steady_clock;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string describe(const ClassParams& p) {
  std::string out = std::string(to_string(p.kind())) + " b=" + num(p.b());
  if (p.has_c()) out += " c=" + num(p.c());
  return out + " q=" + num(p.q());
}

std::string describe(const Region& region, const ClassParams& p) {
  std::string out = "region=" + std::string(region.name());
  if (region.kind() == RegionKind::StarlikeOrder) out += " alpha=" + num(region.alpha());
  return out + " class=" + describe(p);
}

std::string describe_point(Complex w) { return num(w.real()) + (w.imag() < 0 ? "" : "+") + num(w.imag()) + "i"; }

double elapsed_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Region region_for(RegionKind kind, double alpha) {
  return kind == RegionKind::StarlikeOrder ? Region::starlike(alpha) : Region::of(kind);
}

ClassParams corner_params(ClassKind kind) {
  switch (kind) {
    case ClassKind::H1: return ClassParams::h1(1.0, 1.0, 2.0);
    case ClassKind::H2: return ClassParams::h2(1.0, 1.0, 2.0);
    case ClassKind::H3: return ClassParams::h3(1.0, 2.0);
  }
  return ClassParams::h3(1.0, 2.0);
}

std::array<ExtremalKind, 2> class_members(ClassKind kind) {
  switch (kind) {
    case ClassKind::H1: return {ExtremalKind::f1, ExtremalKind::F1};
    case ClassKind::H2: return {ExtremalKind::f2, ExtremalKind::F2};
    case ClassKind::H3: return {ExtremalKind::f3, ExtremalKind::F3};
  }
  return {ExtremalKind::f3, ExtremalKind::F3};
}

bool has_refined_bound(const Region& region, const ClassParams& params) {
  return params.kind() == ClassKind::H2 && (region.kind() == RegionKind::StarlikeOrder ||
                                             region.kind() == RegionKind::Parabolic);
}

void merge(VerificationReport& into, VerificationReport&& from) {
  into.cases_run += from.cases_run;
  into.max_residual = std::max(into.max_residual, from.max_residual);
  for (auto& f : from.failures) into.failures.push_back(std::move(f));
  for (auto& s : from.skipped) into.skipped.push_back(std::move(s));
  for (auto& f : from.flagged) into.flagged.push_back(std::move(f));
}

// zp'(z)/p(z) for p = (1+w)/(1-w), w = z(z+tau)/(1+tau z).
Complex test_family_log_derivative(double tau, Complex z) {
  const Complex den = 1.0 + tau * z;
  const Complex w = z * (z + tau) / den;
  const Complex dw = ((2.0 * z + tau) * den - tau * z * (z + tau)) / (den * den);
  return 2.0 * z * dw / (1.0 - w * w);
}

}  // namespace

std::string to_json(const VerificationReport& report, bool include_elapsed) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["cases_run"] = report.cases_run;
  j["passed"] = report.passed();
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"inputs", f.inputs},
                        {"expected", f.expected},
                        {"observed", f.observed},
                        {"tolerance", f.tolerance}});
  }
  j["failures"] = std::move(failures);
  j["max_residual"] = report.max_residual;
  if (include_elapsed) j["elapsed_ms"] = report.elapsed_ms;
  j["skipped"] = report.skipped;
  auto flagged = nlohmann::ordered_json::array();
  for (const auto& f : report.flagged) {
    flagged.push_back({{"part", f.part}, {"inputs", f.inputs}, {"discrepancy", f.discrepancy}});
  }
  j["flagged"] = std::move(flagged);
  return j.dump();
}

std::mt19937_64 suite_rng(std::uint64_t seed, std::string_view suite) {
  // FNV-1a over the suite name, mixed with the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : suite) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ClassParams random_admissible(ClassKind kind, std::mt19937_64& rng) {
  for (;;) {
    const double b = uniform01(rng);
    const double c = uniform01(rng);
    const double q = 2.0 * uniform01(rng);
    try {
      switch (kind) {
        case ClassKind::H1: return ClassParams::h1(b, c, q);
        case ClassKind::H2: return ClassParams::h2(b, c, q);
        case ClassKind::H3: return ClassParams::h3(b, q);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InfeasibleParams) throw;
    }
  }
}

namespace {

void check_margin(double margin) {
  if (!(margin > 0.0 && margin <= 0.1)) {
    throw Error(ErrorKind::DomainError, "margin must lie in (0, 0.1]");
  }
}

VerificationReport tightness_checks(const Region& region, const ClassParams& params, double rho,
                                    bool sharp, double margin) {
  const auto t0 = Clock::now();
  VerificationReport report;
  report.suite = "tightness";
  const std::string where = describe(region, params);
  const double r_in = rho * (1.0 - margin);

  // (a) class members just inside the radius stay in the region.
  for (ExtremalKind kind : class_members(params.kind())) {
    const FactoredFunction f = build_extremal_unchecked(kind, params);
    for (double sign : {-1.0, 1.0}) {
      const Complex w = log_derivative(f, sign * r_in);
      ++report.cases_run;
      if (!contains(region, w)) {
        report.failures.push_back({where + " check=a extremal=" + std::string(to_string(kind)) +
                                       " z=" + num(sign * r_in),
                                   "inside", "outside at w=" + describe_point(w), 0.0});
      }
    }
  }

  // (b) the witness just beyond the radius leaves the region.
  const auto witness = sharpness_witness(region.kind(), params.kind());
  if (!sharp || !witness) {
    report.skipped.push_back(where + " check=b: not claimed sharp");
  } else if (!sharpness_conditions_hold(region.kind(), params)) {
    report.skipped.push_back(where + " check=b: sign conditions do not hold");
  } else if (rho * (1.0 + margin) >= 1.0) {
    report.skipped.push_back(where + " check=b: rho(1+margin) >= 1");
  } else {
    const double r_out = rho * (1.0 + margin);
    const Complex w = log_derivative(build_extremal(witness->kind, params), witness->sign * r_out);
    ++report.cases_run;
    if (contains(region, w)) {
      report.failures.push_back({where + " check=b extremal=" + std::string(to_string(witness->kind)) +
                                     " z=" + num(witness->sign * r_out),
                                 "outside", "inside at w=" + describe_point(w), 0.0});
    }
  }

  // (c) the bounding set just inside the radius lies in the region.
  const double radius = disc_bound(params, r_in);
  double cut = -std::numeric_limits<double>::infinity();
  if (has_refined_bound(region, params)) cut = refined_h2_lower(params, r_in).value;
  std::vector<Complex> samples;
  samples.reserve(2 * kCirclePoints);
  for (std::size_t i = 0; i < kCirclePoints; ++i) {
    const Complex w = 1.0 + std::polar(radius, 2.0 * kPi * static_cast<double>(i) / kCirclePoints);
    if (w.real() >= cut) samples.push_back(w);
  }
  if (cut > 1.0 - radius) {
    const double half = std::sqrt(std::max(0.0, radius * radius - (cut - 1.0) * (cut - 1.0)));
    for (std::size_t i = 0; i <= kCirclePoints; ++i) {
      const double t = -half + 2.0 * half * static_cast<double>(i) / kCirclePoints;
      samples.emplace_back(cut, t);
    }
  }
  ++report.cases_run;
  for (const Complex& w : samples) {
    if (!contains(region, w)) {
      report.failures.push_back({where + " check=c r=" + num(r_in), "inside",
                                 "outside at w=" + describe_point(w), 0.0});
      break;
    }
  }
  report.elapsed_ms = elapsed_since(t0);
  return report;
}

}  // namespace

VerificationReport verify_tightness_at(const Region& region, const ClassParams& params,
                                       double rho, double margin) {
  check_margin(margin);
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorKind::DomainError, "rho must lie in (0,1)");
  return tightness_checks(region, params, rho, sharp_claimed(region.kind(), params.kind()), margin);
}

VerificationReport verify_radius_tightness(const Region& region, const ClassParams& params,
                                           double margin) {
  check_margin(margin);
  const auto t0 = Clock::now();
  std::optional<RadiusResult> solved;
  try {
    solved = compute_radius(region, params);
  } catch (const Error& e) {
    VerificationReport report;
    report.suite = "tightness";
    report.cases_run = 1;
    report.failures.push_back({describe(region, params), "a radius in (0,1)", e.what(), 0.0});
    report.elapsed_ms = elapsed_since(t0);
    return report;
  }
  VerificationReport report =
      tightness_checks(region, params, solved->radius, solved->sharp_claimed, margin);
  report.max_residual = std::max(report.max_residual, std::abs(solved->residual));
  report.elapsed_ms = elapsed_since(t0);
  return report;
}

VerificationReport verify_tightness_suite(std::size_t per_part, std::uint64_t seed, double margin) {
  const auto t0 = Clock::now();
  auto rng = suite_rng(seed, "tightness");
  VerificationReport report;
  report.suite = "tightness";
  for (RegionKind kind : all_region_kinds()) {
    for (ClassKind cls : {ClassKind::H1, ClassKind::H2, ClassKind::H3}) {
      merge(report, verify_radius_tightness(region_for(kind, 0.0), corner_params(cls), margin));
      for (std::size_t i = 0; i < per_part; ++i) {
        const double alpha = 0.9 * uniform01(rng);
        const ClassParams params = random_admissible(cls, rng);
        merge(report, verify_radius_tightness(region_for(kind, alpha), params, margin));
      }
    }
  }
  report.elapsed_ms = elapsed_since(t0);
  return report;
}

VerificationReport verify_lemma_bounds(std::size_t samples, std::uint64_t seed, double bound_scale) {
  if (samples < 1) throw Error(ErrorKind::DomainError, "samples must be at least 1");
  const auto t0 = Clock::now();
  auto rng = suite_rng(seed, "lemmas");
  VerificationReport report;
  report.suite = "lemmas";
  for (std::size_t i = 0; i < samples; ++i) {
    const double tau = uniform01(rng);
    Complex z;
    if (i % 10 == 0) {
      // The bounds are attained on the real axis.
      const double r = kSampleRadius * uniform01(rng);
      z = uniform01(rng) < 0.5 ? -r : r;
    } else {
      const double r = kSampleRadius * std::sqrt(uniform01(rng));
      z = std::polar(r, 2.0 * kPi * uniform01(rng));
    }
    const double r = std::max(std::abs(z), 1e-9);
    if (std::abs(z) < 1e-9) z = r;

    const Complex g = test_family_log_derivative(tau, z);
    const double upper = bound_scale * mccarty_upper(tau, 0.0, r);
    const double lower = bound_scale * mccarty_lower(tau, 0.0, r).value;
    ++report.cases_run;
    const std::string where = "tau=" + num(tau) + " z=" + describe_point(z);
    const double over = std::abs(g) - upper;
    const double under = lower - g.real();
    report.max_residual = std::max({report.max_residual, over, under});
    if (over > kLemmaSlack) {
      report.failures.push_back({where + " bound=upper", "<= " + num(upper), num(std::abs(g)), kLemmaSlack});
    }
    if (under > kLemmaSlack) {
      report.failures.push_back({where + " bound=lower", ">= " + num(lower), num(g.real()), kLemmaSlack});
    }
  }
  report.elapsed_ms = elapsed_since(t0);
  return report;
}

VerificationReport verify_polynomial_crosscheck(std::size_t grid_size, std::uint64_t seed,
                                                double tolerance) {
  if (grid_size < 1) throw Error(ErrorKind::DomainError, "grid_size must be at least 1");
  const auto t0 = Clock::now();
  auto rng = suite_rng(seed, "crosscheck");
  VerificationReport report;
  report.suite = "crosscheck";
  for (ClassKind cls : {ClassKind::H1, ClassKind::H2, ClassKind::H3}) {
    for (std::size_t i = 0; i < grid_size; ++i) {
      const ClassParams params = random_admissible(cls, rng);
      const double alpha = 0.99 * uniform01(rng);
      double cardioid = 0.0, nephroid = 0.0;
      for (RegionKind kind : all_region_kinds()) {
        const Region region = region_for(kind, alpha);
        const std::string where = describe(region, params);
        ++report.cases_run;
        std::optional<RadiusResult> solved;
        try {
          solved = compute_radius(region, params);
        } catch (const Error& e) {
          report.failures.push_back({where, "a radius in (0,1)", e.what(), 0.0});
          continue;
        }
        const RadiusResult& result = *solved;
        if (kind == RegionKind::Cardioid) cardioid = result.radius;
        if (kind == RegionKind::Nephroid) nephroid = result.radius;
        if (result.flagged) {
          report.flagged.push_back({std::string(region.name()) + "/" + std::string(to_string(cls)),
                                    where, result.cross_check_discrepancy});
          continue;
        }
        report.max_residual = std::max(report.max_residual, result.cross_check_discrepancy);
        if (!(result.cross_check_discrepancy <= tolerance)) {
          report.failures.push_back({where, "|stated root - generic root| <= " + num(tolerance),
                                     num(result.cross_check_discrepancy), tolerance});
        }
      }
      ++report.cases_run;
      if (!(std::abs(cardioid - nephroid) <= kIdentityTolerance)) {
        report.failures.push_back({"cardioid vs nephroid " + describe(params), "equal radii",
                                   num(cardioid) + " vs " + num(nephroid), kIdentityTolerance});
      }
    }
  }
  report.elapsed_ms = elapsed_since(t0);
  return report;
}

}  // namespace radii
