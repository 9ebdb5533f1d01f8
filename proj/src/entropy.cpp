#include "rse/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "rse/error.hpp"
#include "rse/roughset.hpp"

namespace rse {
namespace {

std::vector<Partition> drop_one(const AttributePartitions& partitions, std::size_t skip) {
  std::vector<Partition> rest;
  rest.reserve(partitions.size() - 1);
  for (std::size_t i = 0; i < partitions.size(); ++i)
    if (i != skip) rest.push_back(partitions[i].second);
  return rest;
}

}  // namespace

double partition_entropy(const Partition& partition, double log_base) {
  if (!(log_base > 1.0)) fail(ErrorCode::ConfigFormat, "log_base must be greater than 1");
  double n = static_cast<double>(partition.size());
  if (n == 0.0) return 0.0;
  double h = 0.0;
  for (const std::vector<std::size_t>& block : partition.blocks()) {
    double p = static_cast<double>(block.size()) / n;
    h -= p * std::log(p);
  }
  return h / std::log(log_base);
}

double significance(const AttributePartitions& partitions, std::string_view attr,
                    double log_base) {
  std::size_t index = partitions.size();
  for (std::size_t i = 0; i < partitions.size(); ++i)
    if (partitions[i].first == attr) index = i;
  if (index == partitions.size())
    fail(ErrorCode::UnknownAttribute, "attribute '" + std::string(attr) + "'");
  if (partitions.size() == 1)
    // Dropping the only attribute leaves the trivial partition with H = 0.
    return std::abs(partition_entropy(partitions[0].second, log_base));

  std::vector<Partition> all;
  all.reserve(partitions.size());
  for (const auto& [name, p] : partitions) all.push_back(p);
  double h_full = partition_entropy(joint_partition(all), log_base);
  double h_rest = partition_entropy(joint_partition(drop_one(partitions, index)), log_base);
  return std::abs(h_full - h_rest);
}

double WeightReport::sgf_of(std::string_view attr) const {
  for (const auto& [name, value] : sgf)
    if (name == attr) return value;
  fail(ErrorCode::UnknownAttribute, "attribute '" + std::string(attr) + "'");
}

double WeightReport::weight_of(std::string_view attr) const {
  for (const auto& [name, value] : weights)
    if (name == attr) return value;
  if (is_redundant(attr)) return 0.0;
  fail(ErrorCode::UnknownAttribute, "attribute '" + std::string(attr) + "'");
}

bool WeightReport::is_redundant(std::string_view attr) const {
  for (const std::string& name : redundant)
    if (name == attr) return true;
  return false;
}

WeightReport weighting_report(const AttributePartitions& partitions, double log_base,
                              double epsilon) {
  if (partitions.empty()) throw std::invalid_argument("need at least one attribute");
  WeightReport report;

  std::vector<Partition> all;
  all.reserve(partitions.size());
  for (const auto& [name, p] : partitions) all.push_back(p);
  report.h_full = partition_entropy(joint_partition(all), log_base);

  for (std::size_t i = 0; i < partitions.size(); ++i) {
    double h_rest = partitions.size() == 1
                        ? 0.0
                        : partition_entropy(joint_partition(drop_one(partitions, i)), log_base);
    report.h_drop.emplace_back(partitions[i].first, h_rest);
    report.sgf.emplace_back(partitions[i].first, std::abs(report.h_full - h_rest));
  }
  report.weights = normalise_weights(report.sgf, epsilon, &report.redundant);
  return report;
}

std::vector<std::pair<std::string, double>> normalise_weights(
    std::span<const std::pair<std::string, double>> sgf, double epsilon,
    std::vector<std::string>* redundant_out) {
  if (!(epsilon >= 0.0)) fail(ErrorCode::ConfigFormat, "epsilon must be non-negative");
  double total = 0.0;
  std::vector<std::string> redundant;
  for (const auto& [name, value] : sgf) {
    if (value <= epsilon)
      redundant.push_back(name);
    else
      total += value;
  }
  if (redundant.size() == sgf.size())
    fail(ErrorCode::AllRedundant, "every attribute has significance <= epsilon");

  std::vector<std::pair<std::string, double>> weights;
  for (const auto& [name, value] : sgf)
    if (value > epsilon) weights.emplace_back(name, value / total);
  if (redundant_out) *redundant_out = std::move(redundant);
  return weights;
}

}  // namespace rse
