#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "radii/class_params.hpp"
#include "radii/regions.hpp"

namespace radii {

struct VerificationFailure {
  std::string inputs;
  std::string expected;
  std::string observed;
  double tolerance;
};

/// A (region, class) pair whose discrepancy is reported rather than asserted.
struct FlaggedDiscrepancy {
  std::string part;
  std::string inputs;
  double discrepancy;
};

struct VerificationReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<VerificationFailure> failures;
  double max_residual = 0.0;
  double elapsed_ms = 0.0;
  std::vector<std::string> skipped;
  std::vector<FlaggedDiscrepancy> flagged;

  bool passed() const noexcept { return failures.empty(); }
};

/// JSON object with suite, cases_run, failures, max_residual, elapsed_ms,
/// skipped and flagged. Timing is left out when include_elapsed is false.
std::string to_json(const VerificationReport& report, bool include_elapsed = true);

/// Random stream for a suite, derived from (seed, suite name) only.
std::mt19937_64 suite_rng(std::uint64_t seed, std::string_view suite);

/// Uniform double in [0,1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& rng);

/// Uniform draw of (b, c, q) from the box, rejecting inadmissible triples.
ClassParams random_admissible(ClassKind kind, std::mt19937_64& rng);

inline constexpr double kDefaultMargin = 0.01;

/// (a) extremal images at +-rho(1-margin) are inside; (b) for sharp pairs under
/// the sign conditions, the witness at rho(1+margin) is outside, otherwise the
/// check is recorded as skipped; (c) 720 points on the boundary of the disc
/// |w-1| <= disc_bound(rho(1-margin)) are inside. For the two pairs with a
/// refined lower bound, (c) samples the disc cut at Re w = lower bound.
/// Throws DomainError unless margin lies in (0, 0.1].
VerificationReport verify_radius_tightness(const Region& region, const ClassParams& params,
                                           double margin = kDefaultMargin);

/// The same checks around a caller-supplied radius instead of the computed one.
VerificationReport verify_tightness_at(const Region& region, const ClassParams& params,
                                       double rho, double margin = kDefaultMargin);

/// verify_radius_tightness over all 30 pairs at b = c = 1, q = 2 and at
/// `per_part` random admissible parameter sets per pair.
VerificationReport verify_tightness_suite(std::size_t per_part, std::uint64_t seed,
                                          double margin = kDefaultMargin);

/// Upper and lower coefficient bounds against p(z) = (1+w)/(1-w),
/// w = z(z+tau)/(1+tau z), at random tau in [0,1], |z| <= 0.95. The bounds are
/// multiplied by bound_scale, so a scale below 1 tightens them.
VerificationReport verify_lemma_bounds(std::size_t samples, std::uint64_t seed,
                                       double bound_scale = 1.0);

/// For grid_size random admissible parameter sets per class and every region,
/// the stated equation and the generic condition agree to 1e-9, and the
/// cardioid and nephroid radii agree to 1e-12. The two flagged pairs are
/// reported in `flagged`.
VerificationReport verify_polynomial_crosscheck(std::size_t grid_size, std::uint64_t seed,
                                                double tolerance = 1e-9);

}  // namespace radii
