#include "rse/pipeline.hpp"

#include <algorithm>

#include "rse/error.hpp"
#include "rse/proximity.hpp"
#include "rse/roughset.hpp"

namespace rse {

double LevelResult::score_of(std::string_view id) const {
  for (const auto& [name, score] : scores)
    if (name == id) return score;
  fail(ErrorCode::UnknownObject, "object '" + std::string(id) + "'");
}

const LevelResult& EvaluationReport::level(std::string_view id) const {
  for (const LevelResult& level : levels)
    if (level.level_id == id) return level;
  fail(ErrorCode::UnknownLevel, "level '" + std::string(id) + "'");
}

LevelResult run_level(const InformationSystem& system, const EvaluationConfig& config,
                      std::string_view level_id) {
  const LevelSpec& spec = config.level(level_id);
  LevelResult result;
  result.level_id = spec.id;
  result.alpha = config.level_alpha(spec);
  result.attribute_order = spec.attributes;

  for (const std::string& name : spec.attributes)
    result.partitions.emplace_back(name, attribute_partition(system, name, result.alpha));

  // Grade scale: enough grades for the busiest attribute unless pinned.
  std::size_t max_classes = 0;
  for (const auto& [name, partition] : result.partitions)
    max_classes = std::max(max_classes, partition.block_count());
  result.scale = spec.scale.value_or(static_cast<int>(max_classes));

  for (const auto& [name, partition] : result.partitions)
    result.classes.push_back(order_classes(partition, system.column(name), system.attribute(name)));

  result.graded = assign_grades(system.objects(), spec.attributes, result.classes,
                                result.scale, config.comment_labels, config.grade_overrides);

  std::vector<Partition> parts;
  for (const auto& [name, partition] : result.partitions) parts.push_back(partition);
  result.joint = joint_partition(parts);

  result.weight_report =
      weighting_report(result.partitions, config.log_base, config.redundancy_epsilon);

  for (std::size_t o = 0; o < system.object_count(); ++o) {
    double score = 0.0;
    for (std::size_t a = 0; a < result.attribute_order.size(); ++a) {
      double w = result.weight_report.weight_of(result.attribute_order[a]);
      score += w * static_cast<double>(result.graded.grade(o, a));
    }
    result.scores.emplace_back(system.objects()[o], score);
  }

  for (std::size_t a = 0; a < result.attribute_order.size(); ++a) {
    std::size_t used = result.classes[a].size();
    if (used < static_cast<std::size_t>(result.scale)) {
      int lowest = result.graded.grade(result.classes[a].back().members.front(), a);
      result.diagnostics.push_back(
          "attribute '" + result.attribute_order[a] + "' forms " + std::to_string(used) +
          (used == 1 ? " class" : " classes") + " on a scale of " +
          std::to_string(result.scale) + "; grades are top-aligned (lowest assigned " +
          std::to_string(lowest) + ")");
    }
  }
  return result;
}

EvaluationReport run_all(const InformationSystem& system, const EvaluationConfig& config) {
  validate_config(config, system);
  EvaluationReport report;
  report.config = config;
  for (const LevelSpec& level : config.levels)
    report.levels.push_back(run_level(system, config, level.id));
  return report;
}

std::vector<RankEntry> rank_within_level(const LevelResult& level) {
  std::vector<RankEntry> entries;
  entries.reserve(level.scores.size());
  for (const auto& [id, score] : level.scores) entries.push_back({id, score, 0});
  // Stable keeps input order inside a tie group.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.score > b.score; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].score == entries[i - 1].score)
      entries[i].rank = entries[i - 1].rank;
    else
      entries[i].rank = static_cast<int>(i) + 1;
  }
  return entries;
}

}  // namespace rse
