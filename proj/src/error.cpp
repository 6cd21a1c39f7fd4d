#include "asmproj/error.hpp"

namespace asmproj {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::LineNotAlternating: return "LineNotAlternating";
    case ErrorKind::LineSumNotOne: return "LineSumNotOne";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::RowNotStrict: return "RowNotStrict";
    case ErrorKind::InterlacingViolated: return "InterlacingViolated";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::NotAnAsm: return "NotAnAsm";
    case ErrorKind::BadRowSums: return "BadRowSums";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::StaleTrapezoid: return "StaleTrapezoid";
    case ErrorKind::NotMajorized: return "NotMajorized";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NegativePartialSum: return "NegativePartialSum";
    case ErrorKind::CornerOutOfRange: return "CornerOutOfRange";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ProjectionMismatch: return "ProjectionMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace asmproj
