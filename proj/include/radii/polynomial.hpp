#pragma once

#include <cstddef>
#include <vector>

namespace radii {

/// Real polynomial with ascending coefficients, degree at most 8. Trailing
/// zeros are trimmed on construction; the zero polynomial keeps one coefficient.
class Polynomial {
 public:
  static constexpr std::size_t kMaxDegree = 8;

  /// Throws DomainError for non-finite coefficients or degree above 8.
  explicit Polynomial(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  double max_abs_coeff() const noexcept;

  double operator()(double r) const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

}  // namespace radii
