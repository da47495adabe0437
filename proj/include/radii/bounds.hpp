#pragma once

#include "radii/class_params.hpp"

namespace radii {

/// Largest r accepted by the bound functions; every bound blows up at r = 1.
inline constexpr double kMaxRadius = 1.0 - 1e-9;

/// Upper bound for |zp'(z)/p(z)| at |z| = r over P_b(alpha):
/// 2(1-a)r/(1-r^2) * (br^2+2r+b) / ((1-2a)r^2 + 2b(1-a)r + 1).
double mccarty_upper(double b, double alpha, double r);

enum class LowerBranch { Small, Large };

/// Lower bound for Re(zp'(z)/p(z)) at |z| = r over P_b(alpha), with the
/// quantities that select its branch.
struct LowerBoundBranch {
  double C_b;
  double D_b;
  double R_b;      ///< C_b - D_b
  double R_alpha;  ///< sqrt(alpha * C_1)
  double value;
  LowerBranch branch;  ///< Small iff R_alpha <= R_b
};

LowerBoundBranch mccarty_lower(double b, double alpha, double r);

/// C_b - D_b - sqrt(C_1/2) at alpha = 1/2, in closed form. Requires r in (0, 1/3).
double lemma2_condition(double b, double r);

/// Bound M(r) on |zf'(z)/f(z) - 1| at |z| = r for the class.
double disc_bound(const ClassParams& params, double r);

struct RefinedLowerBound {
  double value;
  bool justified;  ///< r < 1/3, where the small branch is certified
};

/// Lower bound for Re(zf'(z)/f(z)) at |z| = r over H2. Throws WrongVariant otherwise.
RefinedLowerBound refined_h2_lower(const ClassParams& params, double r);

}  // namespace radii
