#include "cqdirac/error.hpp"

namespace cqdirac {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotMinkowski: return "NotMinkowski";
    case Errc::BadDirection: return "BadDirection";
    case Errc::BadRotor: return "BadRotor";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::OffShell: return "OffShell";
    case Errc::MasslessUnsupported: return "MasslessUnsupported";
    case Errc::ZeroState: return "ZeroState";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotInSubspace: return "NotInSubspace";
    case Errc::IncommensurateMomenta: return "IncommensurateMomenta";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::optional<double> residual)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      residual_(residual) {}

}  // namespace cqdirac
