#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cqdirac {

enum class Errc {
  NotInvertible,
  NotMinkowski,
  BadDirection,
  BadRotor,
  UnsupportedField,
  OffShell,
  MasslessUnsupported,
  ZeroState,
  NotNormal,
  NotInSubspace,
  IncommensurateMomenta,
};

std::string_view to_string(Errc code);

/// The single exception type thrown by the library. `residual()` is set
/// when the failure has a natural magnitude (e.g. distance from a subspace).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<double> residual = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  Errc code_;
  std::optional<double> residual_;
};

}  // namespace cqdirac
