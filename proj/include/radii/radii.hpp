#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "radii/class_params.hpp"
#include "radii/errors.hpp"
#include "radii/polynomial.hpp"
#include "radii/regions.hpp"

namespace radii {

/// The radius equation of one (region, class) pair. Every pair has a
/// polynomial except (starlike, h2), whose equation is a sum of rational terms.
class TheoremEquation {
 public:
  using Function = std::function<double(double)>;

  explicit TheoremEquation(Polynomial poly) : impl_(std::move(poly)) {}
  TheoremEquation(Function f, double scale) : impl_(std::move(f)), scale_(scale) {}

  bool is_polynomial() const noexcept { return std::holds_alternative<Polynomial>(impl_); }
  /// Throws WrongVariant for the rational form.
  const Polynomial& polynomial() const;

  double operator()(double r) const;

  /// Magnitude used to normalize residuals: 1 + max |coefficient|.
  double scale() const noexcept;

 private:
  std::variant<Polynomial, Function> impl_;
  double scale_ = 1.0;
};

/// The equation exactly as stated for this pair, derived parameters substituted.
TheoremEquation theorem_equation(const Region& region, const ClassParams& params);

/// The generic condition used for cross-checking, as a function of r whose
/// smallest zero in (0,1) is the radius:
///   disc_bound - delta            for most pairs,
///   refined_h2_lower - alpha      for (starlike, h2),
///   refined_h2_lower - disc_bound for (parabolic, h2).
double generic_condition(const Region& region, const ClassParams& params, double r);

inline constexpr double kRootIntervalHi = 1.0 - 1e-9;
inline constexpr double kDefaultTolerance = 1e-12;

/// Smallest root in (lo, hi): sign scan over 4096 cells (refined by 4 up to
/// 65536 when no sign change shows), then bisection to width tol.
/// Throws NoRoot when no sign change is found.
double smallest_root(const std::function<double(double)>& eq, double lo, double hi,
                     double tol = kDefaultTolerance);
double smallest_root(const TheoremEquation& eq, double lo, double hi,
                     double tol = kDefaultTolerance);

enum class RadiusMethod { PolynomialRoot, GenericBisection, TranscendentalBisection };

std::string_view to_string(RadiusMethod method) noexcept;

struct RadiusResult {
  Region region;
  ClassParams params;
  double radius;
  RadiusMethod method;
  double residual;  ///< defining equation at radius, divided by its scale
  double cross_check_discrepancy;
  bool sharp_claimed;
  bool justified_flag;
  /// The stated equation and the generic condition are not expected to agree
  /// to cross-check tolerance for this pair; the discrepancy is reported only.
  bool flagged;
};

/// Whether the stated result for this pair is claimed sharp.
bool sharp_claimed(RegionKind region, ClassKind cls) noexcept;

/// Pairs whose stated equation differs from the generic condition:
/// (nephroid, h3) has q = 2 substituted; (parabolic, h2) uses a different chain.
bool is_flagged_pair(RegionKind region, ClassKind cls) noexcept;

/// Throws DomainError unless tol lies in [1e-14, 1e-6]; NoRoot if either path
/// finds no root.
RadiusResult compute_radius(const Region& region, const ClassParams& params,
                            double tol = kDefaultTolerance);

struct TableEntry {
  Region region;
  ClassParams params;
  std::optional<RadiusResult> result;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

/// compute_radius over regions x params, region-major, then params in input
/// order. Errors are recorded per entry. `threads` = 0 picks the hardware
/// concurrency.
std::vector<TableEntry> radius_table(std::span<const Region> regions,
                                     std::span<const ClassParams> params,
                                     double tol = kDefaultTolerance, unsigned threads = 0);

}  // namespace radii
