#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rse/information_system.hpp"
#include "rse/partition.hpp"

namespace rse {

// Symmetric, reflexive pairwise similarity in [0, 1] over n objects.
class ProximityMatrix {
public:
  // Entries row-major, n x n. Must be symmetric with a unit diagonal.
  ProximityMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  // Table rendering with ids as row/column headers, entries at 3 decimals.
  std::string to_csv(std::span<const std::string> ids) const;

private:
  std::size_t n_;
  std::vector<double> entries_;
};

// Similarity 1 - |v_i - v_j| / range. All values must lie in [0, range].
ProximityMatrix numeric_proximity(std::span<const double> values, double range);

// Exact-match similarity: 1 for equal labels, 0 otherwise.
ProximityMatrix categorical_proximity(std::span<const std::string> labels);

// Kernel dispatch on a raw column: numeric or exact-match by spec kind.
ProximityMatrix build_proximity(std::span<const Value> values, const AttributeSpec& spec);

// Proximity for one attribute of the system, picking the kernel by kind.
ProximityMatrix build_proximity(const InformationSystem& system, std::string_view attr);

// Blocks are the connected components of the graph that joins i and j
// whenever similarity >= alpha; i.e. the transitive closure of the
// thresholded relation. Compared at full precision, not at 3 decimals.
Partition alpha_partition(const ProximityMatrix& matrix, double alpha,
                          std::vector<std::string> universe);

// Partition of the system's objects by one attribute at threshold alpha.
Partition attribute_partition(const InformationSystem& system, std::string_view attr,
                              double alpha);

}  // namespace rse
