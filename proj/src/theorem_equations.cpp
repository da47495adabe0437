#include "theorem_equations.hpp"

#include <cmath>
#include <numbers>

namespace radii::detail {

namespace {

using Coeffs = std::vector<double>;

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kE = std::numbers::e;
const double kSin1 = std::sin(1.0);

// Coefficients in ascending powers of r.
// For sine_h1 the r^2 coefficient is 12 - 2 sin 1 + (2 - sin 1)(qs + d(q+s)),
// which is what clearing denominators in disc_bound = sin 1 gives.

Coeffs starlike_h1(double d, double s, double q, double a) {
  return {a - 1,
              a*(d + q + s),
              a*d*q + a*d*s + a*q*s + 2*a + d*q + d*s + q*s + 10,
              a*d*q*s + a*d + a*q + a*s + 2*d*q*s + 10*d + 10*q + 10*s,
              8*(d*q + d*s + q*s + 3),
              -a*d*q*s - a*d - a*q - a*s + 4*d*q*s + 12*d + 12*q + 12*s,
              -a*d*q - a*d*s - a*q*s - 2*a + 3*d*q + 3*d*s + 3*q*s + 14,
              -(a - 2)*(d + q + s),
              1 - a};
}

Coeffs starlike_h3(double l, double q, double a) {
  return {a - 1,
              a*(l + q),
              a*l*q + a + l*q + 7,
              6*(l + q),
              -a*l*q - a + 3*l*q + 9,
              -(a - 2)*(l + q),
              1 - a};
}

Coeffs lemniscate_h1(double d, double s, double q) {
  return {1 - kSqrt2,
              -(kSqrt2 - 2)*(d + q + s),
              -d*kSqrt2*q - d*kSqrt2*s + 3*d*q + 3*d*s - kSqrt2*q*s - 2*kSqrt2 + 3*q*s + 14,
              -d*kSqrt2*q*s - d*kSqrt2 + 4*d*q*s + 12*d - kSqrt2*q - kSqrt2*s + 12*q + 12*s,
              8*(d*q + d*s + q*s + 3),
              d*kSqrt2*q*s + d*kSqrt2 + 2*d*q*s + 10*d + kSqrt2*q + kSqrt2*s + 10*q + 10*s,
              d*kSqrt2*q + d*kSqrt2*s + d*q + d*s + kSqrt2*q*s + 2*kSqrt2 + q*s + 10,
              kSqrt2*(d + q + s),
              kSqrt2 - 1};
}

Coeffs lemniscate_h2(double m, double n, double q) {
  return {1 - kSqrt2,
              -(kSqrt2 - 2)*(m + n + q),
              -kSqrt2*m*n - kSqrt2*m*q - kSqrt2*n*q - kSqrt2 + 3*m*n + 3*m*q + 3*n*q + 11,
              -kSqrt2*m*n*q - kSqrt2*n + 4*m*n*q + 8*m + 12*n + 8*q,
              kSqrt2*m*q + kSqrt2 + 8*m*n + 3*m*q + 8*n*q + 11,
              kSqrt2*m*n*q + kSqrt2*m + kSqrt2*n + kSqrt2*q + 2*m*n*q + 2*m + 10*n + 2*q,
              (kSqrt2 + 1)*(m*n + n*q + 1),
              kSqrt2*n};
}

Coeffs lemniscate_h3(double l, double q) {
  return {1 - kSqrt2,
              -(kSqrt2 - 2)*(l + q),
              -kSqrt2*l*q - kSqrt2 + 3*l*q + 9,
              6*(l + q),
              kSqrt2*l*q + kSqrt2 + l*q + 7,
              kSqrt2*(l + q),
              kSqrt2 - 1};
}

Coeffs parabolic_h1(double d, double s, double q) {
  return {-1,
              d + q + s,
              3*d*q + 3*d*s + 3*q*s + 22,
              5*d*q*s + 21*d + 21*q + 21*s,
              16*(d*q + d*s + q*s + 3),
              7*d*q*s + 23*d + 23*q + 23*s,
              5*d*q + 5*d*s + 5*q*s + 26,
              3*(d + q + s),
              1};
}

Coeffs parabolic_h2(double m, double n, double q) {
  return {-1,
              m + q,
              4*m*n + 3*m*q + 4*n*q + 18,
              8*m*n*q + 17*m + 36*n + 17*q,
              4*(7*m*n + 3*m*q + 7*n*q + 10),
              12*m*n*q + 19*m + 40*n + 19*q,
              8*m*n + 5*m*q + 8*n*q + 22,
              3*m + 4*n + 3*q,
              1};
}

Coeffs parabolic_h3(double l, double q) {
  return {-1,
              l + q,
              3*(l*q + 5),
              12*(l + q),
              5*l*q + 17,
              3*(l + q),
              1};
}

Coeffs exponential_h1(double d, double s, double q) {
  return {1 - kE,
              d + q + s,
              d*kE*q + d*kE*s + d*q + d*s + kE*q*s + 10*kE + q*s + 2,
              2*d*kE*q*s + 10*d*kE + d*q*s + d + 10*kE*q + 10*kE*s + q + s,
              8*kE*(d*q + d*s + q*s + 3),
              4*d*kE*q*s + 12*d*kE - d*q*s - d + 12*kE*q + 12*kE*s - q - s,
              3*d*kE*q + 3*d*kE*s - d*q - d*s + 3*kE*q*s + 14*kE - q*s - 2,
              (2*kE - 1)*(d + q + s),
              kE - 1};
}

Coeffs exponential_h2(double m, double n, double q) {
  return {1 - kE,
              m + n + q,
              kE*m*n + kE*m*q + kE*n*q + 9*kE + m*n + m*q + n*q + 1,
              2*kE*m*n*q + 8*kE*m + 10*kE*n + 8*kE*q + m*n*q + n,
              8*kE*m*n + 5*kE*m*q + 8*kE*n*q + 13*kE - m*q - 1,
              4*kE*m*n*q + 4*kE*m + 12*kE*n + 4*kE*q - m*n*q - m - n - q,
              (3*kE - 1)*(m*n + n*q + 1),
              n*(2*kE - 1)};
}

Coeffs exponential_h3(double l, double q) {
  return {1 - kE,
              l + q,
              kE*l*q + 7*kE + l*q + 1,
              6*kE*(l + q),
              3*kE*l*q + 9*kE - l*q - 1,
              (2*kE - 1)*(l + q),
              kE - 1};
}

Coeffs cardioid_h1(double d, double s, double q) {
  return {-2,
              d + q + s,
              4*(d*q + d*s + q*s + 8),
              7*d*q*s + 31*d + 31*q + 31*s,
              24*(d*q + d*s + q*s + 3),
              11*d*q*s + 35*d + 35*q + 35*s,
              8*(d*q + d*s + q*s + 5),
              5*(d + q + s),
              2};
}

Coeffs cardioid_h2(double m, double n, double q) {
  return {-2,
              m + n + q,
              4*(m*n + m*q + n*q + 7),
              7*m*n*q + 24*m + 31*n + 24*q,
              2*(12*m*n + 7*m*q + 12*n*q + 19),
              11*m*n*q + 11*m + 35*n + 11*q,
              8*(m*n + n*q + 1),
              5*n};
}

Coeffs cardioid_h3(double l, double q) {
  return {-2,
              l + q,
              2*(2*l*q + 11),
              18*(l + q),
              2*(4*l*q + 13),
              5*(l + q),
              2};
}

Coeffs sine_h1(double d, double s, double q) {
  return {-kSin1,
              -(kSin1 - 1)*(d + q + s),
              -d*kSin1*q - d*kSin1*s + 2*d*q + 2*d*s - kSin1*q*s - 2*kSin1 + 2*q*s + 12,
              -d*kSin1*q*s - d*kSin1 + 3*d*q*s + 11*d - kSin1*q - kSin1*s + 11*q + 11*s,
              8*(d*q + d*s + q*s + 3),
              d*kSin1*q*s + d*kSin1 + 3*d*q*s + 11*d + kSin1*q + kSin1*s + 11*q + 11*s,
              d*kSin1*q + d*kSin1*s + 2*d*q + 2*d*s + kSin1*q*s + 2*kSin1 + 2*q*s + 12,
              (kSin1 + 1)*(d + q + s),
              kSin1};
}

Coeffs sine_h2(double m, double n, double q) {
  return {-kSin1,
              -(kSin1 - 1)*(m + n + q),
              -kSin1*m*n - kSin1*m*q - kSin1*n*q - kSin1 + 2*m*n + 2*m*q + 2*n*q + 10,
              -kSin1*m*n*q - kSin1*n + 3*m*n*q + 8*m + 11*n + 8*q,
              kSin1*m*q + kSin1 + 8*m*n + 4*m*q + 8*n*q + 12,
              kSin1*m*n*q + kSin1*m + kSin1*n + kSin1*q + 3*m*n*q + 3*m + 11*n + 3*q,
              (kSin1 + 2)*(m*n + n*q + 1),
              n*(kSin1 + 1)};
}

Coeffs sine_h3(double l, double q) {
  return {-kSin1,
              -(kSin1 - 1)*(l + q),
              -kSin1*l*q - kSin1 + 2*l*q + 8,
              6*(l + q),
              kSin1*l*q + kSin1 + 2*l*q + 8,
              (kSin1 + 1)*(l + q),
              kSin1};
}

Coeffs lune_h1(double d, double s, double q) {
  return {kSqrt2 - 2,
              (kSqrt2 - 1)*(d + q + s),
              d*kSqrt2*q + d*kSqrt2*s + kSqrt2*q*s + 2*kSqrt2 + 8,
              d*kSqrt2*q*s + d*kSqrt2 + d*q*s + 9*d + kSqrt2*q + kSqrt2*s + 9*q + 9*s,
              8*(d*q + d*s + q*s + 3),
              -d*kSqrt2*q*s - d*kSqrt2 + 5*d*q*s + 13*d - kSqrt2*q - kSqrt2*s + 13*q + 13*s,
              -d*kSqrt2*q - d*kSqrt2*s + 4*d*q + 4*d*s - kSqrt2*q*s - 2*kSqrt2 + 4*q*s + 16,
              -(kSqrt2 - 3)*(d + q + s),
              2 - kSqrt2};
}

Coeffs lune_h2(double m, double n, double q) {
  return {kSqrt2 - 2,
              (kSqrt2 - 1)*(m + n + q),
              kSqrt2*m*n + kSqrt2*m*q + kSqrt2*n*q + kSqrt2 + 8,
              kSqrt2*m*n*q + kSqrt2*n + m*n*q + 8*m + 9*n + 8*q,
              -kSqrt2*m*q - kSqrt2 + 8*m*n + 6*m*q + 8*n*q + 14,
              -kSqrt2*m*n*q - kSqrt2*m - kSqrt2*n - kSqrt2*q + 5*m*n*q + 5*m + 13*n + 5*q,
              -(kSqrt2 - 4)*(m*n + n*q + 1),
              -n*(kSqrt2 - 3)};
}

Coeffs lune_h3(double l, double q) {
  return {kSqrt2 - 2,
              (kSqrt2 - 1)*(l + q),
              kSqrt2*l*q + kSqrt2 + 6,
              6*(l + q),
              -kSqrt2*l*q - kSqrt2 + 4*l*q + 10,
              -(kSqrt2 - 3)*(l + q),
              2 - kSqrt2};
}

Coeffs rational_h1(double d, double s, double q) {
  return {2*kSqrt2 - 3,
              2*(kSqrt2 - 1)*(d + q + s),
              2*d*kSqrt2*q + 2*d*kSqrt2*s - d*q - d*s + 2*kSqrt2*q*s + 4*kSqrt2 - q*s + 6,
              2*(d*kSqrt2*q*s + d*kSqrt2 + 4*d + kSqrt2*q + kSqrt2*s + 4*q + 4*s),
              8*(d*q + d*s + q*s + 3),
              -2*(d*kSqrt2*q*s + d*kSqrt2 - 3*d*q*s - 7*d + kSqrt2*q + kSqrt2*s - 7*q - 7*s),
              -2*d*kSqrt2*q - 2*d*kSqrt2*s + 5*d*q + 5*d*s - 2*kSqrt2*q*s - 4*kSqrt2 + 5*q*s + 18,
              -2*(kSqrt2 - 2)*(d + q + s),
              3 - 2*kSqrt2};
}

Coeffs rational_h2(double m, double n, double q) {
  return {2*kSqrt2 - 3,
              2*(kSqrt2 - 1)*(m + n + q),
              2*kSqrt2*m*n + 2*kSqrt2*m*q + 2*kSqrt2*n*q + 2*kSqrt2 - m*n - m*q - n*q + 7,
              2*(kSqrt2*m*n*q + kSqrt2*n + 4*m + 4*n + 4*q),
              -2*kSqrt2*m*q - 2*kSqrt2 + 8*m*n + 7*m*q + 8*n*q + 15,
              -2*(kSqrt2*m*n*q + kSqrt2*m + kSqrt2*n + kSqrt2*q - 3*m*n*q - 3*m - 7*n - 3*q),
              -(2*kSqrt2 - 5)*(m*n + n*q + 1),
              -2*n*(kSqrt2 - 2)};
}

Coeffs rational_h3(double l, double q) {
  return {2*kSqrt2 - 3,
              2*(kSqrt2 - 1)*(l + q),
              2*kSqrt2*l*q + 2*kSqrt2 - l*q + 5,
              6*(l + q),
              -2*kSqrt2*l*q - 2*kSqrt2 + 5*l*q + 11,
              -2*(kSqrt2 - 2)*(l + q),
              3 - 2*kSqrt2};
}

Coeffs nephroid_h1(double d, double s, double q) {
  return {-2,
              d + q + s,
              4*(d*q + d*s + q*s + 8),
              7*d*q*s + 31*d + 31*q + 31*s,
              24*(d*q + d*s + q*s + 3),
              11*d*q*s + 35*d + 35*q + 35*s,
              8*(d*q + d*s + q*s + 5),
              5*(d + q + s),
              2};
}

Coeffs nephroid_h2(double m, double n, double q) {
  return {-2,
              m + n + q,
              4*(m*n + m*q + n*q + 7),
              7*m*n*q + 24*m + 31*n + 24*q,
              2*(12*m*n + 7*m*q + 12*n*q + 19),
              11*m*n*q + 11*m + 35*n + 11*q,
              8*(m*n + n*q + 1),
              5*n};
}

// Stated with q = 2 already substituted; q is accepted for uniformity only.
Coeffs nephroid_h3(double l, [[maybe_unused]] double q) {
  return {-2,
              l + 2,
              2*(4*l + 11),
              18*(l + 2),
              2*(8*l + 13),
              5*(l + 2),
              2};
}

Coeffs sigmoid_h1(double d, double s, double q) {
  return {1 - kE,
              2*(d + q + s),
              d*kE*q + d*kE*s + 3*d*q + 3*d*s + kE*q*s + 10*kE + 3*q*s + 14,
              2*(d*kE*q*s + 5*d*kE + 2*d*q*s + 6*d + 5*kE*q + 5*kE*s + 6*q + 6*s),
              8*(kE + 1)*(d*q + d*s + q*s + 3),
              2*(2*d*kE*q*s + 6*d*kE + d*q*s + 5*d + 6*kE*q + 6*kE*s + 5*q + 5*s),
              3*d*kE*q + 3*d*kE*s + d*q + d*s + 3*kE*q*s + 14*kE + q*s + 10,
              2*kE*(d + q + s),
              kE - 1};
}

Coeffs sigmoid_h2(double m, double n, double q) {
  return {1 - kE,
              2*(m + n + q),
              kE*m*n + kE*m*q + kE*n*q + 9*kE + 3*m*n + 3*m*q + 3*n*q + 11,
              2*(kE*m*n*q + 4*kE*m + 5*kE*n + 4*kE*q + 2*m*n*q + 4*m + 6*n + 4*q),
              8*kE*m*n + 5*kE*m*q + 8*kE*n*q + 13*kE + 8*m*n + 3*m*q + 8*n*q + 11,
              2*(2*kE*m*n*q + 2*kE*m + 6*kE*n + 2*kE*q + m*n*q + m + 5*n + q),
              (3*kE + 1)*(m*n + n*q + 1),
              2*kE*n};
}

Coeffs sigmoid_h3(double l, double q) {
  return {1 - kE,
              2*(l + q),
              kE*l*q + 7*kE + 3*l*q + 9,
              6*(kE + 1)*(l + q),
              3*kE*l*q + 9*kE + l*q + 7,
              2*kE*(l + q),
              kE - 1};
}

}  // namespace

Polynomial stated_polynomial(RegionKind region, const ClassParams& p, double alpha) {
  const double q = p.q();
  switch (p.kind()) {
    case ClassKind::H1: {
      const double d = p.d(), s = p.s();
      switch (region) {
        case RegionKind::StarlikeOrder: return Polynomial(starlike_h1(d, s, q, alpha));
        case RegionKind::Lemniscate: return Polynomial(lemniscate_h1(d, s, q));
        case RegionKind::Parabolic: return Polynomial(parabolic_h1(d, s, q));
        case RegionKind::Exponential: return Polynomial(exponential_h1(d, s, q));
        case RegionKind::Cardioid: return Polynomial(cardioid_h1(d, s, q));
        case RegionKind::Sine: return Polynomial(sine_h1(d, s, q));
        case RegionKind::Lune: return Polynomial(lune_h1(d, s, q));
        case RegionKind::Rational: return Polynomial(rational_h1(d, s, q));
        case RegionKind::Nephroid: return Polynomial(nephroid_h1(d, s, q));
        case RegionKind::Sigmoid: return Polynomial(sigmoid_h1(d, s, q));
      }
      break;
    }
    case ClassKind::H2: {
      const double m = p.m(), n = p.n();
      switch (region) {
        case RegionKind::StarlikeOrder: break;
        case RegionKind::Lemniscate: return Polynomial(lemniscate_h2(m, n, q));
        case RegionKind::Parabolic: return Polynomial(parabolic_h2(m, n, q));
        case RegionKind::Exponential: return Polynomial(exponential_h2(m, n, q));
        case RegionKind::Cardioid: return Polynomial(cardioid_h2(m, n, q));
        case RegionKind::Sine: return Polynomial(sine_h2(m, n, q));
        case RegionKind::Lune: return Polynomial(lune_h2(m, n, q));
        case RegionKind::Rational: return Polynomial(rational_h2(m, n, q));
        case RegionKind::Nephroid: return Polynomial(nephroid_h2(m, n, q));
        case RegionKind::Sigmoid: return Polynomial(sigmoid_h2(m, n, q));
      }
      break;
    }
    case ClassKind::H3: {
      const double l = p.l();
      switch (region) {
        case RegionKind::StarlikeOrder: return Polynomial(starlike_h3(l, q, alpha));
        case RegionKind::Lemniscate: return Polynomial(lemniscate_h3(l, q));
        case RegionKind::Parabolic: return Polynomial(parabolic_h3(l, q));
        case RegionKind::Exponential: return Polynomial(exponential_h3(l, q));
        case RegionKind::Cardioid: return Polynomial(cardioid_h3(l, q));
        case RegionKind::Sine: return Polynomial(sine_h3(l, q));
        case RegionKind::Lune: return Polynomial(lune_h3(l, q));
        case RegionKind::Rational: return Polynomial(rational_h3(l, q));
        case RegionKind::Nephroid: return Polynomial(nephroid_h3(l, q));
        case RegionKind::Sigmoid: return Polynomial(sigmoid_h3(l, q));
      }
      break;
    }
  }
  throw Error(ErrorKind::WrongVariant, "no polynomial equation for starlike h2");
}

double starlike_h2_equation(double m, double n, double q, double alpha, double r) {
  return -4.0 / (1.0 - r * r) - 1.0 / (1.0 + n * r) + (2.0 + 2.0 * n * r) / (1.0 + 2.0 * n * r + r * r) +
         (2.0 + m * r) / (1.0 + r * (m + r)) + (2.0 + q * r) / (1.0 + r * (q + r)) - alpha;
}

}  // namespace radii::detail
