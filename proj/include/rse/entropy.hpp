#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rse/partition.hpp"

namespace rse {

// Information entropy of a partition: -sum |X_i|/n * log(|X_i|/n), with the
// logarithm taken in `log_base`. 0 for the single-block partition, log(n)
// for the discrete one.
double partition_entropy(const Partition& partition, double log_base);

// Named per-attribute partitions of one level, in attribute order.
using AttributePartitions = std::vector<std::pair<std::string, Partition>>;

// Significance of one attribute: |H(all) - H(all without it)|, where H is
// the entropy of the joint partition. The attribute must be present.
double significance(const AttributePartitions& partitions, std::string_view attr,
                    double log_base);

struct WeightReport {
  double h_full = 0.0;                                  // H over all attributes
  std::vector<std::pair<std::string, double>> h_drop;   // H without each attribute
  std::vector<std::pair<std::string, double>> sgf;      // significance per attribute
  std::vector<std::string> redundant;                   // sgf <= epsilon
  std::vector<std::pair<std::string, double>> weights;  // retained attributes, sum 1

  double sgf_of(std::string_view attr) const;
  double weight_of(std::string_view attr) const;  // 0 for redundant attributes
  bool is_redundant(std::string_view attr) const;
};

// Normalised weights over the non-redundant attributes. Raises AllRedundant
// when every significance is <= epsilon.
WeightReport weighting_report(const AttributePartitions& partitions, double log_base,
                              double epsilon);

// The normalisation step alone, from precomputed significances.
std::vector<std::pair<std::string, double>> normalise_weights(
    std::span<const std::pair<std::string, double>> sgf, double epsilon,
    std::vector<std::string>* redundant_out = nullptr);

}  // namespace rse
