#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asmproj {

enum class ErrorKind {
  NotSquare,
  EntryOutOfRange,
  LineNotAlternating,
  LineSumNotOne,
  BadShape,
  RowNotStrict,
  InterlacingViolated,
  ValueOutOfRange,
  NotAnAsm,
  BadRowSums,
  NegativeEntry,
  LengthMismatch,
  Infeasible,
  NonPositiveEntry,
  StaleTrapezoid,
  NotMajorized,
  LimitExceeded,
  NegativePartialSum,
  CornerOutOfRange,
  OrderMismatch,
  ProjectionMismatch,
  Parse,
  // A postcondition inside a construction pipeline failed. Always a bug.
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this one exception type; the
// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace asmproj
