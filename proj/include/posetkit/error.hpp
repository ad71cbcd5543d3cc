#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetkit {

enum class ErrorKind {
  InvalidArgument,
  MultipleMinima,
  MultipleMaxima,
  NotGraded,
  DanglingElement,
  NotComparable,
  DegenerateGon,
  UnsupportedField,
  SizeLimit,
  RankMismatch,
  RankTooSmall,
  NotEulerian,
  NotBinomial,
  NotSheffer,
  NotTriangular,
  PreconditionViolated,
  InconsistentWithTheorems,
  BoundExceeded,
  StructuralError,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class PosetError : public std::runtime_error {
 public:
  PosetError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace posetkit
