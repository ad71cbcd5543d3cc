#include "posetkit/error.hpp"

namespace posetkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MultipleMinima: return "MultipleMinima";
    case ErrorKind::MultipleMaxima: return "MultipleMaxima";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::DanglingElement: return "DanglingElement";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::DegenerateGon: return "DegenerateGon";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotBinomial: return "NotBinomial";
    case ErrorKind::NotSheffer: return "NotSheffer";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InconsistentWithTheorems: return "InconsistentWithTheorems";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::StructuralError: return "StructuralError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace posetkit
