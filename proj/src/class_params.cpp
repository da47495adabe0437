#include "radii/class_params.hpp"

#include <cmath>
#include <string>

#include "radii/errors.hpp"

namespace radii {

namespace {

// Admissibility checks tolerate rounding in inputs such as c = 2/3.
constexpr double kSlack = 1e-12;

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorKind::InfeasibleParams, what);
}

void check_range(double x, const char* name, double hi) {
  if (!std::isfinite(x)) infeasible(std::string(name) + " must be finite");
  if (x < -kSlack || x > hi + kSlack) {
    infeasible(std::string(name) + " must lie in [0," + (hi == 1.0 ? "1" : "2") + "]");
  }
}

// Appends to `why` when violated, so one message can name every failed bound.
void check_bound(std::string& why, double value, const char* label, double hi) {
  if (value <= hi + kSlack) return;
  if (!why.empty()) why += "; ";
  why += std::string(label) + " must be <= " + (hi == 1.0 ? "1" : "2");
}

[[noreturn]] void wrong_variant(const char* what, ClassKind kind) {
  throw Error(ErrorKind::WrongVariant,
              std::string(what) + " is not defined for class " + std::string(to_string(kind)));
}

}  // namespace

std::string_view to_string(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::H1: return "h1";
    case ClassKind::H2: return "h2";
    case ClassKind::H3: return "h3";
  }
  return "?";
}

std::optional<ClassKind> parse_class_kind(std::string_view name) noexcept {
  if (name == "h1") return ClassKind::H1;
  if (name == "h2") return ClassKind::H2;
  if (name == "h3") return ClassKind::H3;
  return std::nullopt;
}

ClassParams ClassParams::h1(double b, double c, double q) {
  check_range(b, "b", 1.0);
  check_range(c, "c", 1.0);
  check_range(q, "q", 2.0);
  const double u = 6.0 * b - 4.0 * c;
  const double v = 4.0 * c - q;
  std::string why;
  check_bound(why, std::abs(u), "d=|6b-4c|", 2.0);
  check_bound(why, std::abs(v), "s=|4c-q|", 2.0);
  if (!why.empty()) infeasible(why);
  return ClassParams(ClassKind::H1, b, c, q, u, v);
}

ClassParams ClassParams::h2(double b, double c, double q) {
  check_range(b, "b", 1.0);
  check_range(c, "c", 1.0);
  check_range(q, "q", 2.0);
  const double u = 5.0 * b - 3.0 * c;
  const double v = 3.0 * c - q;
  std::string why;
  check_bound(why, std::abs(u), "m=|5b-3c|", 2.0);
  check_bound(why, std::abs(v), "n=|3c-q|", 1.0);
  if (!why.empty()) infeasible(why);
  return ClassParams(ClassKind::H2, b, c, q, u, v);
}

ClassParams ClassParams::h3(double b, double q) {
  check_range(b, "b", 1.0);
  check_range(q, "q", 2.0);
  const double u = 4.0 * b - q;
  std::string why;
  check_bound(why, std::abs(u), "l=|4b-q|", 2.0);
  if (!why.empty()) infeasible(why);
  return ClassParams(ClassKind::H3, b, 0.0, q, u, 0.0);
}

double ClassParams::c() const {
  if (kind_ == ClassKind::H3) wrong_variant("c", kind_);
  return c_;
}

double ClassParams::d() const {
  if (kind_ != ClassKind::H1) wrong_variant("d", kind_);
  return std::abs(u_);
}

double ClassParams::s() const {
  if (kind_ != ClassKind::H1) wrong_variant("s", kind_);
  return std::abs(v_);
}

double ClassParams::m() const {
  if (kind_ != ClassKind::H2) wrong_variant("m", kind_);
  return std::abs(u_);
}

double ClassParams::n() const {
  if (kind_ != ClassKind::H2) wrong_variant("n", kind_);
  return std::abs(v_);
}

double ClassParams::l() const {
  if (kind_ != ClassKind::H3) wrong_variant("l", kind_);
  return std::abs(u_);
}

}  // namespace radii
