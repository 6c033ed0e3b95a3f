#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schroeter {

// Every failure the library reports carries one of these kinds so callers
// (the CLI in particular) can map it to an exit status.
enum class ErrorKind {
  // projective geometry
  IdenticalPoints,
  IdenticalLines,
  NotCollinear,
  NotConcurrent,
  TooDegenerate,
  SingularMatrix,
  DegenerateFrame,
  // involutions
  NotInPencil,
  DegenerateChoice,
  ForbiddenCarrier,
  DuplicatePoints,
  // cubics
  NotOnCurve,
  SingularPoint,
  LineComponent,
  AmbiguousFit,
  OverconstrainedFit,
  NotAffine,
  // engine
  FourCollinear,
  CompleteQuadrilateral,
  DegenerateNine,
  BarNotOnCurve,
  SharedPoint,
  DegenerateLines,
  InvariantViolation,
  // Weierstrass curves and charts
  SingularCurve,
  BasePointDegenerate,
  OffChartCurve,
  ZeroDenominator,
  DegenerateDirection,
  // theorem checks
  DegenerateHexagon,
  HypothesisFailed,
  LinesNotDistinct,
  // input handling
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}
  explicit GeometryError(ErrorKind kind)
      : std::runtime_error(std::string(to_string(kind))), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schroeter
