#include "knots/errors.hpp"

namespace knots {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::InvalidEdgeSet: return "InvalidEdgeSet";
    case ErrorKind::OrientationConflict: return "OrientationConflict";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorKind::DisconnectedClosure: return "DisconnectedClosure";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::MismatchedBraid: return "MismatchedBraid";
    case ErrorKind::NotFreeLoops: return "NotFreeLoops";
    case ErrorKind::SameCircle: return "SameCircle";
    case ErrorKind::InvalidPlan: return "InvalidPlan";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BraidInputRequired: return "BraidInputRequired";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace knots
