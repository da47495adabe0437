#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radii {

/// Failure categories shared by every module. The CLI maps these onto exit codes.
enum class ErrorKind {
  DomainError,         ///< argument outside the operation's domain
  OutOfWindow,         ///< disc-inclusion formula not applicable at this center
  NoBoundaryOnRay,     ///< ray from 1 never leaves the region
  TooCloseToBoundary,  ///< winding verdict unreliable at polyline resolution
  WrongVariant,        ///< operation requires a different function class
  InfeasibleParams,    ///< class parameters violate their invariants
  NoRoot,              ///< no sign change of the radius equation in the interval
  InvalidExtremal,     ///< extremal construction does not apply at these params
  NearPole,            ///< evaluation point within 1e-12 of a factor zero
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace radii
