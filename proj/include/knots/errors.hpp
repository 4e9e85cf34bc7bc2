#pragma once

#include <stdexcept>
#include <string>

namespace knots {

// Machine-readable error kinds, surfaced verbatim by the CLI in JSON mode.
enum class ErrorKind {
  MalformedCode,
  InvalidEdgeSet,
  OrientationConflict,
  IndexOutOfRange,
  MalformedWord,
  GeneratorOutOfRange,
  DegenerateParameters,
  DisconnectedDiagram,
  DisconnectedClosure,
  NotPositive,
  MismatchedBraid,
  NotFreeLoops,
  SameCircle,
  InvalidPlan,
  BudgetExceeded,
  BraidInputRequired,
  Overflow,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

// Internal consistency check. Violations are library bugs, not user errors.
inline void require_internal(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::Internal, what);
}

}  // namespace knots
