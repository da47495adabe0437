#include "radii/bounds.hpp"

#include <cmath>
#include <string>

#include "radii/errors.hpp"

namespace radii {

namespace {

void check_r(double r, double hi = kMaxRadius) {
  if (!(r > 0.0 && r <= hi)) {
    throw Error(ErrorKind::DomainError, "r=" + std::to_string(r) + " outside the admissible interval");
  }
}

void check_b_alpha(double b, double alpha) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::DomainError, "b must lie in [0,1]");
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::DomainError, "alpha must satisfy 0 <= alpha < 1");
  }
}

// r/(1-r^2) * (xr^2+4r+x)/(r^2+xr+1): one quadratic factor with coefficient x.
double quadratic_term(double x, double r) {
  return r / (1.0 - r * r) * (x * r * r + 4.0 * r + x) / (r * r + x * r + 1.0);
}

double c_b(double b, double alpha, double r) {
  const double num = (1.0 + b * r) * (1.0 + b * r) - (2.0 * alpha - 1.0) * (b + r) * (b + r) * r * r;
  return num / ((1.0 + 2.0 * b * r + r * r) * (1.0 - r * r));
}

}  // namespace

double mccarty_upper(double b, double alpha, double r) {
  check_b_alpha(b, alpha);
  check_r(r);
  const double num = 2.0 * (1.0 - alpha) * r * (b * r * r + 2.0 * r + b);
  const double den =
      (1.0 - r * r) * ((1.0 - 2.0 * alpha) * r * r + 2.0 * b * (1.0 - alpha) * r + 1.0);
  return num / den;
}

LowerBoundBranch mccarty_lower(double b, double alpha, double r) {
  check_b_alpha(b, alpha);
  check_r(r);
  LowerBoundBranch out{};
  out.C_b = c_b(b, alpha, r);
  out.D_b = 2.0 * (1.0 - alpha) * (b + r) * (1.0 + b * r) * r /
            ((1.0 + 2.0 * b * r + r * r) * (1.0 - r * r));
  out.R_b = out.C_b - out.D_b;
  const double c1 = c_b(1.0, alpha, r);
  out.R_alpha = std::sqrt(alpha * c1);
  if (out.R_alpha <= out.R_b) {
    out.branch = LowerBranch::Small;
    out.value = -2.0 * (1.0 - alpha) * r * (b * r * r + 2.0 * r + b) /
                ((1.0 + 2.0 * alpha * b * r + (2.0 * alpha - 1.0) * r * r) *
                 (r * r + 2.0 * b * r + 1.0));
  } else {
    out.branch = LowerBranch::Large;
    out.value = (2.0 * out.R_alpha - c1 - alpha) / (1.0 - alpha);
  }
  return out;
}

double lemma2_condition(double b, double r) {
  if (!(b >= 0.0 && b <= 1.0)) throw Error(ErrorKind::DomainError, "b must lie in [0,1]");
  if (!(r > 0.0 && r < 1.0 / 3.0)) throw Error(ErrorKind::DomainError, "r must lie in (0,1/3)");
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double num = -1.0 + 4.0 * r2 + 2.0 * b * b * r2 + 8.0 * b * r2 * r + r4 + 2.0 * b * b * r4;
  const double t = 1.0 + 2.0 * b * r + r2;
  return num / (2.0 * (r - 1.0) * (1.0 + r) * t * t);
}

double disc_bound(const ClassParams& params, double r) {
  check_r(r);
  const double q = params.q();
  switch (params.kind()) {
    case ClassKind::H1:
      return quadratic_term(params.d(), r) + quadratic_term(params.s(), r) + quadratic_term(q, r);
    case ClassKind::H2: {
      const double n = params.n();
      const double linear = r / (1.0 - r * r) * (n * r * r + 2.0 * r + n) / (n * r + 1.0);
      return quadratic_term(params.m(), r) + linear + quadratic_term(q, r);
    }
    case ClassKind::H3:
      return quadratic_term(params.l(), r) + quadratic_term(q, r);
  }
  return 0.0;
}

RefinedLowerBound refined_h2_lower(const ClassParams& params, double r) {
  if (params.kind() != ClassKind::H2) {
    throw Error(ErrorKind::WrongVariant, "refined lower bound is defined for class h2 only");
  }
  check_r(r);
  const double m = params.m();
  const double n = params.n();
  const double q = params.q();
  const double linear =
      r * (n + 2.0 * r + n * r * r) / ((1.0 + n * r) * (1.0 + 2.0 * n * r + r * r));
  const double value = 1.0 - quadratic_term(m, r) - quadratic_term(q, r) - linear;
  return {value, r < 1.0 / 3.0};
}

}  // namespace radii
