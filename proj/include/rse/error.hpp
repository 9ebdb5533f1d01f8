#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rse {

// Every validation failure carries one of these codes so callers (and the CLI)
// can report a stable, machine-readable reason string.
enum class ErrorCode {
  CsvFormat,         // malformed csv structure (ragged row, empty header, ...)
  InvalidNumber,     // cell did not parse as a decimal number
  MissingCell,       // empty cell, or a declared column absent from the header
  DuplicateObjectId, // two rows share an id
  OutOfRange,        // numeric value outside [0, range] for its attribute
  UnknownLabel,      // categorical value not in the attribute's label order
  ConfigFormat,      // config file malformed or internally inconsistent
  UnknownAttribute,  // attribute name not declared / not in the system
  UnknownLevel,      // level id not declared in the config
  OverlappingLevels, // an attribute assigned to more than one level
  UncoveredAttribute,// an attribute assigned to no level
  UnknownObject,     // object id not in the universe
  UniverseMismatch,  // partitions over different universes combined
  AmbiguousCategory, // categorical block holds more than one label
  ScaleTooSmall,     // more similarity classes than grades on the scale
  AllRedundant,      // every attribute of a level has zero significance
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace rse
