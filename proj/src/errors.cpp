#include "radii/errors.hpp"

namespace radii {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::NoBoundaryOnRay: return "NoBoundaryOnRay";
    case ErrorKind::TooCloseToBoundary: return "TooCloseToBoundary";
    case ErrorKind::WrongVariant: return "WrongVariant";
    case ErrorKind::InfeasibleParams: return "InfeasibleParams";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::InvalidExtremal: return "InvalidExtremal";
    case ErrorKind::NearPole: return "NearPole";
  }
  return "Unknown";
}

}  // namespace radii
