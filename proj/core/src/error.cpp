#include "abelcycle/error.hpp"

namespace abelcycle {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EnergyOutsideAnnulus: return "energy outside periodic annulus";
    case Errc::OutsideInvolutionDomain: return "outside involution domain";
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::RootNotBracketed: return "root not bracketed";
    case Errc::QuadratureFailure: return "quadrature failure";
    case Errc::StepSizeUnderflow: return "stiff or singular trajectory";
    case Errc::UnboundedOrbit: return "unbounded orbit";
    case Errc::NoReturn: return "no return within eta budget";
    case Errc::NoFixedPointInBracket: return "bracket does not straddle a fixed point";
    case Errc::NoLevelForSpeed: return "no energy level for requested speed";
  }
  return "unknown error";
}

}  // namespace abelcycle
