#include "ccl/core/error.hpp"

namespace ccl {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedPair: return "DisconnectedPair";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::ElementOutsideBall: return "ElementOutsideBall";
    case ErrorCode::BallTooSmall: return "BallTooSmall";
    case ErrorCode::InvalidConeSpec: return "InvalidConeSpec";
    case ErrorCode::NotGeodesicInput: return "NotGeodesicInput";
    case ErrorCode::BasepointNotFixed: return "BasepointNotFixed";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::SameOrbitBasepoints: return "SameOrbitBasepoints";
    case ErrorCode::CombingDomainMismatch: return "CombingDomainMismatch";
    case ErrorCode::NotGeodesic: return "NotGeodesic";
    case ErrorCode::SubspaceNotConvex: return "SubspaceNotConvex";
    case ErrorCode::TriplesTooShort: return "TriplesTooShort";
    case ErrorCode::PremiseNotCertified: return "PremiseNotCertified";
    case ErrorCode::NotQuasiGeodesic: return "NotQuasiGeodesic";
    case ErrorCode::OutsideCore: return "OutsideCore";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::BuildError: return "BuildError";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
  }
  return "Error";
}

}  // namespace ccl
