#pragma once

#include <optional>
#include <string_view>

namespace radii {

enum class ClassKind { H1, H2, H3 };

std::string_view to_string(ClassKind kind) noexcept;
std::optional<ClassKind> parse_class_kind(std::string_view name) noexcept;

/// Raw inputs (b, c, q) of one of the three function classes together with the
/// derived coefficients. Construction rejects inadmissible inputs with
/// InfeasibleParams, naming the violated constraint.
class ClassParams {
 public:
  /// b, c in [0,1], q in [0,2], d = |6b-4c| <= 2, s = |4c-q| <= 2.
  static ClassParams h1(double b, double c, double q);
  /// b, c in [0,1], q in [0,2], m = |5b-3c| <= 2, n = |3c-q| <= 1.
  static ClassParams h2(double b, double c, double q);
  /// b in [0,1], q in [0,2], l = |4b-q| <= 2.
  static ClassParams h3(double b, double q);

  ClassKind kind() const noexcept { return kind_; }
  double b() const noexcept { return b_; }
  double q() const noexcept { return q_; }
  /// Throws WrongVariant for H3.
  double c() const;
  bool has_c() const noexcept { return kind_ != ClassKind::H3; }

  // Derived coefficients. Each throws WrongVariant outside its class.
  double d() const;  ///< |6b-4c|, H1
  double s() const;  ///< |4c-q|, H1
  double m() const;  ///< |5b-3c|, H2
  double n() const;  ///< |3c-q|, H2
  double l() const;  ///< |4b-q|, H3

  /// The two (H1, H2) or one (H3) class coefficient before taking absolute
  /// values: 6b-4c and 4c-q, 5b-3c and 3c-q, or 4b-q. Extremal sign conditions
  /// are stated in terms of these.
  double first_signed() const noexcept { return u_; }
  double second_signed() const noexcept { return v_; }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;

 private:
  ClassParams(ClassKind kind, double b, double c, double q, double u, double v)
      : kind_(kind), b_(b), c_(c), q_(q), u_(u), v_(v) {}

  ClassKind kind_;
  double b_, c_, q_;
  double u_, v_;
};

}  // namespace radii
