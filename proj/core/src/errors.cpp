#include "wgm/errors.hpp"

namespace wgm {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::NonFinite: return "NonFinite";
    case Errc::ArgumentAtOrigin: return "ArgumentAtOrigin";
    case Errc::RangeExceeded: return "RangeExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EvenOrder: return "EvenOrder";
    case Errc::BetaMismatch: return "BetaMismatch";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::BranchViolation: return "BranchViolation";
    case Errc::CaseBetaMismatch: return "CaseBetaMismatch";
    case Errc::TermsExceedOrder: return "TermsExceedOrder";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::NonPositiveRadius: return "NonPositiveRadius";
    case Errc::DegenerateWell: return "DegenerateWell";
    case Errc::NoInteriorMinimum: return "NoInteriorMinimum";
    case Errc::IndexNotAboveUnity: return "IndexNotAboveUnity";
    case Errc::DiscontinuousProfile: return "DiscontinuousProfile";
    case Errc::InsufficientDerivatives: return "InsufficientDerivatives";
    case Errc::NonPositiveCurvature: return "NonPositiveCurvature";
    case Errc::OrderTooHigh: return "OrderTooHigh";
    case Errc::NonPositiveHessian: return "NonPositiveHessian";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::MixedCases: return "MixedCases";
    case Errc::BoundaryRootSuspected: return "BoundaryRootSuspected";
    case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
    case Errc::MaxSubdivisionExceeded: return "MaxSubdivisionExceeded";
    case Errc::MatchingDenominatorTiny: return "MatchingDenominatorTiny";
    case Errc::GridTooCoarse: return "GridTooCoarse";
    case Errc::GridMisaligned: return "GridMisaligned";
    case Errc::UnsupportedM: return "UnsupportedM";
    case Errc::FactorizationSingular: return "FactorizationSingular";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NonMonotoneConvergence: return "NonMonotoneConvergence";
    case Errc::InsufficientOracleData: return "InsufficientOracleData";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

ErrorKind kind_of(Errc code) noexcept {
  switch (code) {
    case Errc::BoundaryRootSuspected:
    case Errc::QuadratureNotConverged:
    case Errc::MaxSubdivisionExceeded:
    case Errc::FactorizationSingular:
    case Errc::NoConvergence:
    case Errc::NonMonotoneConvergence:
      return ErrorKind::nonconvergence;
    case Errc::ConfigError:
      return ErrorKind::config;
    default:
      return ErrorKind::precondition;
  }
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace wgm
