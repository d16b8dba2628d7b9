#include "orthobound/error.hpp"

namespace orthobound {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::RealModeViolation: return "RealModeViolation";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::GramResidualExceeded: return "GramResidualExceeded";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::NonpositiveReSum: return "NonpositiveReSum";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::BadLambda: return "BadLambda";
    case ErrorKind::BadEpsilon: return "BadEpsilon";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::SandwichViolated: return "SandwichViolated";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace orthobound
