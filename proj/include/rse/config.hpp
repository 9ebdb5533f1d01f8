#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rse/attribute.hpp"

namespace rse {

class InformationSystem;

// Replacement comment/grade pair for one similarity class, best class first.
struct GradeOverride {
  std::string label;
  int grade = 0;
};

struct LevelSpec {
  std::string id;
  std::vector<std::string> attributes;   // must partition the declared attributes
  std::optional<double> alpha;           // overrides the global threshold
  std::optional<int> scale;              // overrides the derived grade scale
};

// Everything the pipeline needs besides the data itself. Serialized as a
// versioned JSON document; see README for the file format.
struct EvaluationConfig {
  static constexpr int kVersion = 1;

  double alpha = 0.85;
  double log_base = 10.0;
  double redundancy_epsilon = 1e-9;
  std::vector<std::string> comment_labels = {"Very good", "Good", "Average",
                                             "Poor", "Very poor"};
  std::vector<AttributeSpec> attributes;
  std::vector<LevelSpec> levels;
  std::map<std::string, std::vector<GradeOverride>> grade_overrides;

  static EvaluationConfig from_json_text(std::string_view text);
  static EvaluationConfig from_file(const std::string& path);
  std::string to_json_text() const;

  // Checks internal consistency and stamps each attribute with its level id.
  // Throws ConfigFormat / UnknownAttribute / OverlappingLevels /
  // UncoveredAttribute.
  void validate();

  const LevelSpec& level(std::string_view id) const;  // UnknownLevel on a miss
  double level_alpha(const LevelSpec& level) const;
};

// Succeeds iff every level's attributes exist in the system, no attribute sits
// in two levels, and every system attribute is covered by some level.
void validate_config(const EvaluationConfig& config, const InformationSystem& system);

std::string read_text_file(const std::string& path);

}  // namespace rse
