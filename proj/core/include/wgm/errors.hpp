#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wgm {

enum class Errc {
  // specfun
  OrderOutOfRange,
  NonFinite,
  ArgumentAtOrigin,
  RangeExceeded,
  IndexOutOfRange,
  EvenOrder,
  // series
  BetaMismatch,
  OrderMismatch,
  BranchViolation,
  CaseBetaMismatch,
  TermsExceedOrder,
  // cavity
  InvalidParameters,
  NonPositiveRadius,
  DegenerateWell,
  NoInteriorMinimum,
  IndexNotAboveUnity,
  DiscontinuousProfile,
  // asymptotics
  InsufficientDerivatives,
  NonPositiveCurvature,
  OrderTooHigh,
  NonPositiveHessian,
  UnsupportedCase,
  MixedCases,
  // modal
  BoundaryRootSuspected,
  QuadratureNotConverged,
  MaxSubdivisionExceeded,
  MatchingDenominatorTiny,
  GridTooCoarse,
  // fdpml
  GridMisaligned,
  UnsupportedM,
  FactorizationSingular,
  NoConvergence,
  NonMonotoneConvergence,
  // cli
  InsufficientOracleData,
  ConfigError,
};

// How a failure maps onto the CLI exit-code contract.
enum class ErrorKind { precondition, nonconvergence, config };

std::string_view to_string(Errc code) noexcept;
ErrorKind kind_of(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

}  // namespace wgm
