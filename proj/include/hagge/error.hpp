#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hagge {

enum class ErrorCode {
  // kernel
  CollinearInput,
  PointAtInfinity,
  KnownPointNotIncident,
  IdenticalCircles,
  CenterInversion,
  DegenerateQuad,
  LineAtInfinity,
  ImaginaryCircle,
  CoincidentLines,
  ZeroVector,
  // conic engine
  DependentConstraints,
  NoConic,
  SharedPointNotIncident,
  CoincidentConics,
  TangentialDegeneracy,
  DegenerateInvolution,
  UnderDetermined,
  PointNotOnConic,
  // first generalization
  KNotOnSigma,
  DegenerateTriangle,
  KOnSideLine,
  CoincidentPoints,
  // four-circle
  ZeroParameter,
  InvalidParams,
  EqualParameters,
  DegenerateDenominator,
  AuxCircleDegenerate,
  // second generalization
  NotASimilarity,
  CollinearSource,
  NoUniqueFixedPoint,
  ParallelPerpendiculars,
  TOnSide,
  TNotOnCircle,
  // harness
  GenerationExhausted,
  SchemaError,
  ValidationError,
  IoError,
};

std::string_view error_name(ErrorCode code);

class GeomError : public std::runtime_error {
 public:
  GeomError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hagge
