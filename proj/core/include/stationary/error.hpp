#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stationary {

enum class ErrorKind {
  // validation: bad input, caught before any numerics run
  kParameterOutOfRange,
  kSpecValidation,
  kPrecondition,
  kDomain,
  kIo,
  kOpenMesh,
  // numerical failures
  kSingularPoint,
  kOriginOnSurface,
  kDegenerateParametrization,
  kSingularIntegrand,
  kBandLimitViolation,
  kOriginCollision,
  kFoliationCollapse,
  kCylindricalInput,
  kPlanarity,
  kFrame,
  kNormalization,
  kFrameUndefined,
  kDegenerateFamily,
  kOriginInFace,
  kFlowSingularity,
  kStall,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that describe a numerical breakdown rather than bad input.
bool is_numerical(ErrorKind kind);

struct ParamLocation {
  double u = 0.0;
  double v = 0.0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, ParamLocation where);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<ParamLocation>& where() const noexcept { return where_; }

  /// Copy of this error with a parameter location attached.
  Error at(ParamLocation where) const;

 private:
  ErrorKind kind_;
  std::optional<ParamLocation> where_;
  std::string bare_message_;
};

}  // namespace stationary
