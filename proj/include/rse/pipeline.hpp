#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rse/config.hpp"
#include "rse/entropy.hpp"
#include "rse/information_system.hpp"
#include "rse/ordering.hpp"
#include "rse/partition.hpp"

namespace rse {

// Everything computed for one level: per-attribute partitions and class
// orders, the graded table, entropy-based weights, and the final scores.
struct LevelResult {
  std::string level_id;
  double alpha = 0.0;
  int scale = 0;
  std::vector<std::string> attribute_order;
  AttributePartitions partitions;             // parallel to attribute_order
  std::vector<std::vector<OrderedClass>> classes;
  GradedTable graded;
  Partition joint;                            // under all attributes at once
  WeightReport weight_report;
  std::vector<std::pair<std::string, double>> scores;  // object order
  std::vector<std::string> diagnostics;

  double score_of(std::string_view id) const;  // UnknownObject on a miss
};

struct EvaluationReport {
  EvaluationConfig config;  // effective values after overrides
  std::vector<LevelResult> levels;

  const LevelResult& level(std::string_view id) const;  // UnknownLevel
};

struct RankEntry {
  std::string id;
  double score = 0.0;
  int rank = 0;  // 1-based; equal scores share a rank
};

// Runs one level end to end: threshold the per-attribute proximities,
// order and grade the classes, derive entropy weights, and combine the
// weighted grades into a score per object.
LevelResult run_level(const InformationSystem& system, const EvaluationConfig& config,
                      std::string_view level_id);

// All levels in config order. The config must validate against the system.
EvaluationReport run_all(const InformationSystem& system, const EvaluationConfig& config);

// Objects of one level sorted by descending score; ties share a rank and
// keep input order among themselves.
std::vector<RankEntry> rank_within_level(const LevelResult& level);

}  // namespace rse
