#include "radii/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "radii/errors.hpp"

namespace radii {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw Error(ErrorKind::DomainError, "polynomial coefficients must be finite");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  if (coeffs_.size() > kMaxDegree + 1) {
    throw Error(ErrorKind::DomainError, "polynomial degree exceeds 8");
  }
}

double Polynomial::max_abs_coeff() const noexcept {
  double best = 0.0;
  for (double c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

double Polynomial::operator()(double r) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

}  // namespace radii
