#pragma once

// Bucketed closed polyline for repeated winding-number and proximity queries.

#include <cstdint>
#include <optional>
#include <vector>

#include "radii/regions.hpp"

namespace radii::detail {

double point_segment_distance(Complex p, Complex a, Complex b) noexcept;

/// Winding number of the closed polyline about w (Sunday's crossing rule).
int winding_number(const std::vector<Complex>& vertices, Complex w) noexcept;

class CurveIndex {
 public:
  /// `near` is the largest distance near_distance() must resolve exactly.
  CurveIndex(std::vector<Complex> vertices, double near);

  const std::vector<Complex>& vertices() const noexcept { return vertices_; }

  /// Distance to the polyline when it is below `near`, nullopt otherwise.
  std::optional<double> near_distance(Complex w) const;

  int winding_number(Complex w) const;

 private:
  std::size_t cell_of(double x, double x0, double step) const noexcept;

  static constexpr std::size_t kGrid = 64;

  std::vector<Complex> vertices_;
  double near_;
  double x0_, y0_, dx_, dy_;
  std::vector<std::vector<std::uint32_t>> cells_;  // kGrid * kGrid, near-expanded
  std::vector<std::vector<std::uint32_t>> rows_;   // kGrid horizontal bands
};

}  // namespace radii::detail
