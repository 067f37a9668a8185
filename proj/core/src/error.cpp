#include "stationary/error.hpp"

#include <sstream>

namespace stationary {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameterOutOfRange: return "parameter-out-of-range";
    case ErrorKind::kSpecValidation: return "spec-validation";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kSingularPoint: return "singular-point";
    case ErrorKind::kOriginOnSurface: return "origin-on-surface";
    case ErrorKind::kDegenerateParametrization: return "degenerate-parametrization";
    case ErrorKind::kSingularIntegrand: return "singular-integrand";
    case ErrorKind::kBandLimitViolation: return "band-limit-violation";
    case ErrorKind::kOriginCollision: return "origin-collision";
    case ErrorKind::kFoliationCollapse: return "foliation-collapse";
    case ErrorKind::kCylindricalInput: return "cylindrical-input";
    case ErrorKind::kPlanarity: return "planarity";
    case ErrorKind::kFrame: return "frame";
    case ErrorKind::kNormalization: return "normalization";
    case ErrorKind::kFrameUndefined: return "frame-undefined";
    case ErrorKind::kDegenerateFamily: return "degenerate-family";
    case ErrorKind::kOriginInFace: return "origin-in-face";
    case ErrorKind::kOpenMesh: return "open-mesh";
    case ErrorKind::kFlowSingularity: return "flow-singularity";
    case ErrorKind::kStall: return "stall";
  }
  return "unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameterOutOfRange:
    case ErrorKind::kSpecValidation:
    case ErrorKind::kPrecondition:
    case ErrorKind::kDomain:
    case ErrorKind::kIo:
    case ErrorKind::kOpenMesh:
      return false;
    default:
      return true;
  }
}

namespace {

std::string compose(ErrorKind kind, const std::string& message,
                    const std::optional<ParamLocation>& where) {
  std::ostringstream os;
  os << to_string(kind) << ": " << message;
  if (where) os << " at (u=" << where->u << ", v=" << where->v << ")";
  return os.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(compose(kind, message, std::nullopt)), kind_(kind), bare_message_(message) {}

Error::Error(ErrorKind kind, const std::string& message, ParamLocation where)
    : std::runtime_error(compose(kind, message, where)),
      kind_(kind),
      where_(where),
      bare_message_(message) {}

Error Error::at(ParamLocation where) const { return Error(kind_, bare_message_, where); }

}  // namespace stationary
