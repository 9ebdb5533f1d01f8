#pragma once

#include <span>
#include <string>
#include <vector>

#include "rse/partition.hpp"

namespace rse {

struct ApproximationPair {
  std::vector<std::string> lower;  // union of blocks contained in the target
  std::vector<std::string> upper;  // union of blocks meeting the target
  bool discernible = false;        // lower == upper
};

// Target sets are given by object id; order and duplicates are ignored.
// Results come back in universe (input) order. Ids outside the universe
// raise UnknownObject.
std::vector<std::string> lower_approximation(const Partition& partition,
                                             std::span<const std::string> target);
std::vector<std::string> upper_approximation(const Partition& partition,
                                             std::span<const std::string> target);
ApproximationPair approximate(const Partition& partition,
                              std::span<const std::string> target);

// Greatest common refinement: objects share a block iff they share a block
// in every input partition. All inputs must cover the same universe in the
// same order (UniverseMismatch otherwise); the list must be non-empty.
Partition joint_partition(std::span<const Partition> partitions);

}  // namespace rse
