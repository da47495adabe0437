#pragma once

#include "radii/class_params.hpp"
#include "radii/errors.hpp"
#include "radii/polynomial.hpp"
#include "radii/regions.hpp"

namespace radii::detail {

/// Stated polynomial for every pair except (starlike, h2). `alpha` is read
/// only for the starlike region.
Polynomial stated_polynomial(RegionKind region, const ClassParams& params, double alpha);

/// The (starlike, h2) equation in its stated rational form.
double starlike_h2_equation(double m, double n, double q, double alpha, double r);

}  // namespace radii::detail
