#include "rse/error.hpp"

namespace rse {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CsvFormat: return "CsvFormat";
    case ErrorCode::InvalidNumber: return "InvalidNumber";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::DuplicateObjectId: return "DuplicateObjectId";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::ConfigFormat: return "ConfigFormat";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::UnknownLevel: return "UnknownLevel";
    case ErrorCode::OverlappingLevels: return "OverlappingLevels";
    case ErrorCode::UncoveredAttribute: return "UncoveredAttribute";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::AmbiguousCategory: return "AmbiguousCategory";
    case ErrorCode::ScaleTooSmall: return "ScaleTooSmall";
    case ErrorCode::AllRedundant: return "AllRedundant";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rse
