#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace radii {

/// A point u+iv of the plane. Predicates reject non-finite components.
using Complex = std::complex<double>;

/// The ten target regions for zf'/f, all open, all starlike with respect to 1.
enum class RegionKind {
  StarlikeOrder,  ///< Re w > alpha
  Lemniscate,     ///< right lobe of |w^2 - 1| < 1
  Parabolic,      ///< Re w > |w - 1|
  Exponential,    ///< |log w| < 1
  Cardioid,       ///< interior of the cardioid with cusp at 1/3
  Sine,           ///< image of the unit disc under 1 + sin z
  Lune,           ///< right component of |w^2 - 1| < 2|w|
  Rational,       ///< image of the unit disc under 1 + z(k+z)/(k(k-z)), k = sqrt(2)+1
  Nephroid,       ///< ((u-1)^2 + v^2 - 4/9)^3 - 4v^2/3 < 0
  Sigmoid,        ///< |log(w/(2-w))| < 1
};

enum class MembershipMethod { ClosedForm, WindingNumber };

/// A target region. StarlikeOrder carries its order alpha; the other kinds have none.
class Region {
 public:
  /// Throws DomainError unless 0 <= alpha < 1.
  static Region starlike(double alpha);
  /// Throws DomainError for StarlikeOrder, which needs an explicit alpha.
  static Region of(RegionKind kind);

  RegionKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }

  /// Radius of the largest disc centered at 1 inside the region.
  double delta() const noexcept;
  MembershipMethod membership_method() const noexcept;
  /// Lower-case CLI name ("starlike", "lemniscate", ...).
  std::string_view name() const noexcept;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Region(RegionKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  RegionKind kind_;
  double alpha_;
};

std::string_view to_string(RegionKind kind) noexcept;
std::optional<RegionKind> parse_region_kind(std::string_view name) noexcept;
const std::array<RegionKind, 10>& all_region_kinds() noexcept;

/// Open-set membership. Boundary points and points on a logarithm's branch cut
/// are outside. Throws DomainError if w is not finite.
bool contains(const Region& region, Complex w);

/// Radius of the largest disc about `center` known to lie inside the region.
/// Throws OutOfWindow when the center is outside the formula's validity range.
double inclusion_radius(const Region& region, double center);

/// Boundary point in direction theta. Sine and Rational use the exact
/// parameterization q(e^{i theta}); the implicit regions are resolved by
/// bisection along the ray 1 + t e^{i theta}. Throws NoBoundaryOnRay when the
/// ray never leaves the region (half-plane and parabola directions).
Complex boundary_point(const Region& region, double theta);

/// Winding-number membership against a closed polyline of at least 4096
/// vertices. Throws TooCloseToBoundary when w is within 1e-9 of a segment.
bool winding_membership(std::span<const Complex> boundary_samples, Complex w);

/// Minimum number of vertices accepted by winding_membership.
inline constexpr std::size_t kMinWindingSamples = 4096;

/// Boundary samples on the uniform grid theta_i = 2 pi i / points. Directions
/// with no boundary crossing are omitted; `skipped` receives their count.
std::vector<Complex> boundary_polyline(const Region& region, std::size_t points,
                                       std::size_t* skipped = nullptr);

struct BoundaryProximity {
  double theta;
  Complex point;
  double distance;
};

/// Closest boundary point to w: a scan over the 4096-point polyline followed by
/// golden-section refinement in theta.
BoundaryProximity nearest_boundary_point(const Region& region, Complex w);

/// Writes `theta,re,im` rows with 17 significant digits.
/// Returns the number of directions skipped for lack of a boundary crossing.
std::size_t write_boundary_csv(std::ostream& out, const Region& region,
                               std::size_t points);

}  // namespace radii
