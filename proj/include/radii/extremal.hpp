#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "radii/class_params.hpp"
#include "radii/regions.hpp"

namespace radii {

/// One factor (1 + alpha z + beta z^2)^exponent.
struct Factor {
  double alpha;
  double beta;
  int exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// f(z) = z * prod (1 + alpha_i z + beta_i z^2)^{e_i}.
struct FactoredFunction {
  std::vector<Factor> factors;

  friend bool operator==(const FactoredFunction&, const FactoredFunction&) = default;
};

enum class ExtremalKind { F1, f1, f2, F2, G2, f3, F3, p1, g1, g2 };

std::string_view to_string(ExtremalKind kind) noexcept;

/// Whether the construction applies: F1, f1, g1 need an h1 with c >= q/4 and
/// b >= 2c/3; f2, F2, G2, g2 need an h2 with c >= q/3 and b >= 3c/5; f3, F3
/// need an h3 with b >= q/4; p1 accepts any class.
bool extremal_applies(ExtremalKind kind, const ClassParams& params) noexcept;

/// Throws InvalidExtremal unless extremal_applies.
FactoredFunction build_extremal(ExtremalKind kind, const ClassParams& params);

/// The same factored form with the signed class coefficients and no
/// validity check. Throws InvalidExtremal only for a class mismatch.
FactoredFunction build_extremal_unchecked(ExtremalKind kind, const ClassParams& params);

/// f(z). Throws DomainError unless |z| < 1, NearPole at a zero of a
/// negative-exponent factor.
Complex evaluate(const FactoredFunction& f, Complex z);

/// zf'(z)/f(z) = 1 + sum e_i z(alpha_i + 2 beta_i z) / (1 + alpha_i z + beta_i z^2).
/// Throws DomainError unless |z| < 1; NearPole when a factor is below 1e-12.
Complex log_derivative(const FactoredFunction& f, Complex z);

/// The extremal function and evaluation point that attain the boundary of a
/// region at the radius, for pairs claimed sharp.
struct SharpnessWitness {
  ExtremalKind kind;
  double sign;  ///< evaluate at z = sign * rho
};

std::optional<SharpnessWitness> sharpness_witness(RegionKind region, ClassKind cls) noexcept;

/// Conditions under which the witness attains the bound: the signed class
/// coefficients are nonnegative, and for (starlike, h2) also 3c - q = 1.
bool sharpness_conditions_hold(RegionKind region, const ClassParams& params) noexcept;

/// Distance-like measure of w from the region's boundary, zero on it.
double boundary_residual(const Region& region, Complex w);

/// boundary_residual of log_derivative(extremal, sign * rho), with the sign
/// taken from the witness table. Throws InvalidExtremal when the construction
/// does not apply.
double sharpness_residual(const Region& region, ExtremalKind kind, const ClassParams& params,
                          double rho);

}  // namespace radii
