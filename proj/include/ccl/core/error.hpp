#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccl {

enum class ErrorCode {
  DisconnectedPair,
  ParameterOutOfRange,
  UnsupportedGroup,
  ElementOutsideBall,
  BallTooSmall,
  InvalidConeSpec,
  NotGeodesicInput,
  BasepointNotFixed,
  RadiusTooSmall,
  SameOrbitBasepoints,
  CombingDomainMismatch,
  NotGeodesic,
  SubspaceNotConvex,
  TriplesTooShort,
  PremiseNotCertified,
  NotQuasiGeodesic,
  OutsideCore,
  FormatError,
  ConfigError,
  BuildError,
  UnknownScenario,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccl
