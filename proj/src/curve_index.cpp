#include "curve_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radii::detail {

namespace {

double is_left(Complex a, Complex b, Complex p) noexcept {
  return (b.real() - a.real()) * (p.imag() - a.imag()) -
         (p.real() - a.real()) * (b.imag() - a.imag());
}

int crossing(Complex a, Complex b, Complex w) noexcept {
  if (a.imag() <= w.imag()) {
    if (b.imag() > w.imag() && is_left(a, b, w) > 0.0) return 1;
  } else if (b.imag() <= w.imag() && is_left(a, b, w) < 0.0) {
    return -1;
  }
  return 0;
}

}  // namespace

double point_segment_distance(Complex p, Complex a, Complex b) noexcept {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const Complex ap = p - a;
  double t = (ap.real() * ab.real() + ap.imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

int winding_number(const std::vector<Complex>& vertices, Complex w) noexcept {
  int wn = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    wn += crossing(vertices[i], vertices[(i + 1) % n], w);
  }
  return wn;
}

CurveIndex::CurveIndex(std::vector<Complex> vertices, double near)
    : vertices_(std::move(vertices)), near_(near) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin, xmax = -xmin, ymax = -xmin;
  for (const Complex& v : vertices_) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  }
  x0_ = xmin - near_;
  y0_ = ymin - near_;
  dx_ = (xmax - xmin + 2.0 * near_) / kGrid;
  dy_ = (ymax - ymin + 2.0 * near_) / kGrid;

  cells_.resize(kGrid * kGrid);
  rows_.resize(kGrid);
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    const auto idx = static_cast<std::uint32_t>(i);

    const std::size_t r0 = cell_of(std::min(a.imag(), b.imag()), y0_, dy_);
    const std::size_t r1 = cell_of(std::max(a.imag(), b.imag()), y0_, dy_);
    for (std::size_t r = r0; r <= r1; ++r) rows_[r].push_back(idx);

    const std::size_t cx0 = cell_of(std::min(a.real(), b.real()) - near_, x0_, dx_);
    const std::size_t cx1 = cell_of(std::max(a.real(), b.real()) + near_, x0_, dx_);
    const std::size_t cy0 = cell_of(std::min(a.imag(), b.imag()) - near_, y0_, dy_);
    const std::size_t cy1 = cell_of(std::max(a.imag(), b.imag()) + near_, y0_, dy_);
    for (std::size_t cy = cy0; cy <= cy1; ++cy) {
      for (std::size_t cx = cx0; cx <= cx1; ++cx) cells_[cy * kGrid + cx].push_back(idx);
    }
  }
}

std::size_t CurveIndex::cell_of(double x, double x0, double step) const noexcept {
  const double k = std::floor((x - x0) / step);
  if (!(k > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(k), kGrid - 1);
}

std::optional<double> CurveIndex::near_distance(Complex w) const {
  const double x = w.real(), y = w.imag();
  if (x < x0_ || y < y0_ || x > x0_ + kGrid * dx_ || y > y0_ + kGrid * dy_) {
    return std::nullopt;
  }
  const auto& cell = cells_[cell_of(y, y0_, dy_) * kGrid + cell_of(x, x0_, dx_)];
  const std::size_t n = vertices_.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t i : cell) {
    best = std::min(best, point_segment_distance(w, vertices_[i], vertices_[(i + 1) % n]));
  }
  if (best < near_) return best;
  return std::nullopt;
}

int CurveIndex::winding_number(Complex w) const {
  if (w.imag() < y0_ || w.imag() > y0_ + kGrid * dy_) return 0;
  const std::size_t n = vertices_.size();
  int wn = 0;
  for (std::uint32_t i : rows_[cell_of(w.imag(), y0_, dy_)]) {
    wn += crossing(vertices_[i], vertices_[(i + 1) % n], w);
  }
  return wn;
}

}  // namespace radii::detail
