#include "exactkit/error.hpp"

namespace exactkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonPositiveDivisor: return "NonPositiveDivisor";
    case ErrorCode::ZeroDivisorQuery: return "ZeroDivisorQuery";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnboundAtom: return "UnboundAtom";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::MixedAtoms: return "MixedAtoms";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InconsistentCounts: return "InconsistentCounts";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotEndorelation: return "NotEndorelation";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::BadMethod: return "BadMethod";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::AnnihilatingDelta: return "AnnihilatingDelta";
    case ErrorCode::Unsolvable: return "Unsolvable";
    case ErrorCode::UnbalancedSides: return "UnbalancedSides";
    case ErrorCode::TargetCollision: return "TargetCollision";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace exactkit
