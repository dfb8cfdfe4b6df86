#pragma once

#include <stdexcept>
#include <string>

namespace abelcycle {

enum class Errc {
  EnergyOutsideAnnulus,
  OutsideInvolutionDomain,
  InvalidArgument,
  RootNotBracketed,
  QuadratureFailure,
  StepSizeUnderflow,
  UnboundedOrbit,
  NoReturn,
  NoFixedPointInBracket,
  NoLevelForSpeed,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  explicit Error(Errc code) : std::runtime_error(to_string(code)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace abelcycle
