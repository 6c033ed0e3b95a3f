#include "schroeter/error.hpp"

namespace schroeter {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IdenticalPoints: return "IdenticalPoints";
    case ErrorKind::IdenticalLines: return "IdenticalLines";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::NotConcurrent: return "NotConcurrent";
    case ErrorKind::TooDegenerate: return "TooDegenerate";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::NotInPencil: return "NotInPencil";
    case ErrorKind::DegenerateChoice: return "DegenerateChoice";
    case ErrorKind::ForbiddenCarrier: return "ForbiddenCarrier";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::LineComponent: return "LineComponent";
    case ErrorKind::AmbiguousFit: return "AmbiguousFit";
    case ErrorKind::OverconstrainedFit: return "OverconstrainedFit";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::FourCollinear: return "FourCollinear";
    case ErrorKind::CompleteQuadrilateral: return "CompleteQuadrilateral";
    case ErrorKind::DegenerateNine: return "DegenerateNine";
    case ErrorKind::BarNotOnCurve: return "BarNotOnCurve";
    case ErrorKind::SharedPoint: return "SharedPoint";
    case ErrorKind::DegenerateLines: return "DegenerateLines";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::BasePointDegenerate: return "BasePointDegenerate";
    case ErrorKind::OffChartCurve: return "OffChartCurve";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::DegenerateHexagon: return "DegenerateHexagon";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::LinesNotDistinct: return "LinesNotDistinct";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace schroeter
