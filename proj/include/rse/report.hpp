#pragma once

#include <string>

#include "json.hpp"
#include "rse/pipeline.hpp"

namespace rse {

// JSON forms are deterministic: no timestamps, keys emitted in sorted
// order, doubles in shortest round-trip form. The schema is versioned via
// a top-level "schema_version". Rounded companions of full-precision
// numbers are strings ("0.590") so the three-decimal form survives intact.
nlohmann::json partition_to_json(const Partition& partition);
nlohmann::json level_to_json(const LevelResult& level);
nlohmann::json report_to_json(const EvaluationReport& report);

// Plain-text tables for terminals.
std::string partition_to_text(const Partition& partition);
std::string grades_to_text(const LevelResult& level);
std::string entropy_to_text(const LevelResult& level);
std::string level_to_text(const LevelResult& level);
std::string report_to_text(const EvaluationReport& report);

// Flat csv exports.
std::string grades_to_csv(const LevelResult& level);
std::string entropy_to_csv(const LevelResult& level);
std::string scores_to_csv(const EvaluationReport& report);

}  // namespace rse
