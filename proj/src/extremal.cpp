#include "radii/extremal.hpp"

#include <cmath>
#include <string>

#include "radii/errors.hpp"

namespace radii {

namespace {

constexpr double kSlack = 1e-12;
constexpr double kPoleGuard = 1e-12;

ClassKind owning_class(ExtremalKind kind) noexcept {
  switch (kind) {
    case ExtremalKind::F1:
    case ExtremalKind::f1:
    case ExtremalKind::g1:
      return ClassKind::H1;
    case ExtremalKind::f2:
    case ExtremalKind::F2:
    case ExtremalKind::G2:
    case ExtremalKind::g2:
      return ClassKind::H2;
    case ExtremalKind::f3:
    case ExtremalKind::F3:
    case ExtremalKind::p1:
      return ClassKind::H3;
  }
  return ClassKind::H1;
}

void check_disc(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::DomainError, "extremal functions are evaluated in the open unit disc");
  }
}

Complex factor_value(const Factor& f, Complex z) { return 1.0 + f.alpha * z + f.beta * z * z; }

}  // namespace

std::string_view to_string(ExtremalKind kind) noexcept {
  switch (kind) {
    case ExtremalKind::F1: return "F1";
    case ExtremalKind::f1: return "f1";
    case ExtremalKind::f2: return "f2";
    case ExtremalKind::F2: return "F2";
    case ExtremalKind::G2: return "G2";
    case ExtremalKind::f3: return "f3";
    case ExtremalKind::F3: return "F3";
    case ExtremalKind::p1: return "p1";
    case ExtremalKind::g1: return "g1";
    case ExtremalKind::g2: return "g2";
  }
  return "?";
}

bool extremal_applies(ExtremalKind kind, const ClassParams& params) noexcept {
  if (kind == ExtremalKind::p1) return params.q() <= 2.0 + kSlack;
  if (params.kind() != owning_class(kind)) return false;
  if (params.kind() == ClassKind::H3) return params.first_signed() >= -kSlack;
  return params.first_signed() >= -kSlack && params.second_signed() >= -kSlack;
}

FactoredFunction build_extremal_unchecked(ExtremalKind kind, const ClassParams& params) {
  if (kind != ExtremalKind::p1 && params.kind() != owning_class(kind)) {
    throw Error(ErrorKind::InvalidExtremal, std::string(to_string(kind)) +
                                                " belongs to a different class than " +
                                                std::string(to_string(params.kind())));
  }
  const double q = params.q();
  const double u = params.first_signed();
  const double v = params.second_signed();
  switch (kind) {
    case ExtremalKind::f1:
      return {{{-q, 1, 1}, {-v, 1, 1}, {-u, 1, 1}, {0, -1, -3}}};
    case ExtremalKind::F1:
      return {{{0, -1, 3}, {-q, 1, -1}, {-v, 1, -1}, {-u, 1, -1}}};
    case ExtremalKind::g1:
      return {{{-q, 1, 1}, {-v, 1, 1}, {0, -1, -2}}};
    case ExtremalKind::p1:
      return {{{-q, 1, 1}, {0, -1, -1}}};
    case ExtremalKind::f2:
      return {{{-q, 1, 1}, {-v, 0, 1}, {-u, 1, 1}, {0, -1, -3}}};
    case ExtremalKind::g2:
      return {{{-q, 1, 1}, {-v, 0, 1}, {0, -1, -2}}};
    case ExtremalKind::F2:
      return {{{v, 0, 1}, {0, -1, 2}, {u, 1, -1}, {2 * v, 1, -1}, {q, 1, -1}}};
    case ExtremalKind::G2:
      return {{{0, -1, 1}, {q, 1, -1}, {v, 0, -1}}};
    case ExtremalKind::f3:
      return {{{-q, 1, 1}, {-u, 1, 1}, {0, -1, -2}}};
    case ExtremalKind::F3:
      return {{{0, -1, 2}, {-q, 1, -1}, {-u, 1, -1}}};
  }
  return {};
}

FactoredFunction build_extremal(ExtremalKind kind, const ClassParams& params) {
  if (!extremal_applies(kind, params)) {
    throw Error(ErrorKind::InvalidExtremal,
                std::string(to_string(kind)) + " is not an extremal function at these parameters");
  }
  return build_extremal_unchecked(kind, params);
}

Complex evaluate(const FactoredFunction& f, Complex z) {
  check_disc(z);
  Complex value = z;
  for (const Factor& factor : f.factors) {
    const Complex t = factor_value(factor, z);
    if (factor.exponent < 0 && std::abs(t) < kPoleGuard) {
      throw Error(ErrorKind::NearPole, "evaluation point at a pole");
    }
    value *= std::pow(t, factor.exponent);
  }
  return value;
}

Complex log_derivative(const FactoredFunction& f, Complex z) {
  check_disc(z);
  Complex sum = 1.0;
  for (const Factor& factor : f.factors) {
    const Complex t = factor_value(factor, z);
    if (std::abs(t) < kPoleGuard) {
      throw Error(ErrorKind::NearPole, "evaluation point at a zero of a factor");
    }
    sum += static_cast<double>(factor.exponent) * z * (factor.alpha + 2.0 * factor.beta * z) / t;
  }
  return sum;
}

std::optional<SharpnessWitness> sharpness_witness(RegionKind region, ClassKind cls) noexcept {
  using K = ExtremalKind;
  // Regions reached on the right of 1 use the f-type functions, those reached
  // on the left the F-type; F2 reaches the starlike half-plane at +rho.
  switch (region) {
    case RegionKind::StarlikeOrder:
      if (cls == ClassKind::H1) return SharpnessWitness{K::F1, -1.0};
      if (cls == ClassKind::H2) return SharpnessWitness{K::F2, 1.0};
      return SharpnessWitness{K::F3, -1.0};
    case RegionKind::Lemniscate:
    case RegionKind::Sine:
    case RegionKind::Nephroid:
      if (cls == ClassKind::H1) return SharpnessWitness{K::f1, -1.0};
      if (cls == ClassKind::H2) return SharpnessWitness{K::f2, -1.0};
      return SharpnessWitness{K::f3, -1.0};
    case RegionKind::Sigmoid:
      if (cls == ClassKind::H1) return SharpnessWitness{K::f1, -1.0};
      if (cls == ClassKind::H2) return SharpnessWitness{K::f2, -1.0};
      return SharpnessWitness{K::F3, -1.0};
    case RegionKind::Parabolic:
    case RegionKind::Exponential:
    case RegionKind::Cardioid:
    case RegionKind::Lune:
    case RegionKind::Rational:
      if (cls == ClassKind::H1) return SharpnessWitness{K::F1, -1.0};
      if (cls == ClassKind::H2) return std::nullopt;
      return SharpnessWitness{K::F3, -1.0};
  }
  return std::nullopt;
}

bool sharpness_conditions_hold(RegionKind region, const ClassParams& params) noexcept {
  const auto witness = sharpness_witness(region, params.kind());
  if (!witness || !extremal_applies(witness->kind, params)) return false;
  if (region == RegionKind::StarlikeOrder && params.kind() == ClassKind::H2) {
    return std::abs(params.second_signed() - 1.0) <= kSlack;
  }
  return true;
}

double boundary_residual(const Region& region, Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw Error(ErrorKind::DomainError, "complex value must be finite");
  }
  switch (region.kind()) {
    case RegionKind::StarlikeOrder:
      return std::abs(w.real() - region.alpha());
    case RegionKind::Lemniscate:
      return std::abs(std::abs(w * w - 1.0) - 1.0);
    case RegionKind::Parabolic:
      return std::abs(w.real() - std::abs(w - 1.0));
    case RegionKind::Exponential:
      return std::abs(std::abs(std::log(w)) - 1.0);
    case RegionKind::Lune:
      return std::abs(std::abs(w * w - 1.0) - 2.0 * std::abs(w));
    case RegionKind::Sigmoid:
      return std::abs(std::abs(std::log(w / (2.0 - w))) - 1.0);
    case RegionKind::Cardioid:
    case RegionKind::Sine:
    case RegionKind::Rational:
    case RegionKind::Nephroid:
      return nearest_boundary_point(region, w).distance;
  }
  return 0.0;
}

double sharpness_residual(const Region& region, ExtremalKind kind, const ClassParams& params,
                          double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorKind::DomainError, "rho must lie in (0,1)");
  const FactoredFunction f = build_extremal(kind, params);
  double sign = -1.0;
  if (const auto witness = sharpness_witness(region.kind(), params.kind());
      witness && witness->kind == kind) {
    sign = witness->sign;
  }
  return boundary_residual(region, log_derivative(f, sign * rho));
}

}  // namespace radii
