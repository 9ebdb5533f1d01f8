#include "rse/roughset.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rse/error.hpp"

namespace rse {
namespace {

// Target ids -> membership flags over the universe.
std::vector<char> target_mask(const Partition& partition,
                              std::span<const std::string> target) {
  std::vector<char> mask(partition.size(), 0);
  for (const std::string& id : target) {
    auto it = std::find(partition.universe().begin(), partition.universe().end(), id);
    if (it == partition.universe().end())
      fail(ErrorCode::UnknownObject, "object '" + id + "' not in the universe");
    mask[static_cast<std::size_t>(it - partition.universe().begin())] = 1;
  }
  return mask;
}

std::vector<std::string> collect(const Partition& partition, const std::vector<char>& keep) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) out.push_back(partition.universe()[i]);
  return out;
}

}  // namespace

std::vector<std::string> lower_approximation(const Partition& partition,
                                             std::span<const std::string> target) {
  std::vector<char> mask = target_mask(partition, target);
  std::vector<char> keep(partition.size(), 0);
  for (const std::vector<std::size_t>& block : partition.blocks()) {
    bool contained = std::all_of(block.begin(), block.end(),
                                 [&](std::size_t m) { return mask[m] != 0; });
    if (contained)
      for (std::size_t m : block) keep[m] = 1;
  }
  return collect(partition, keep);
}

std::vector<std::string> upper_approximation(const Partition& partition,
                                             std::span<const std::string> target) {
  std::vector<char> mask = target_mask(partition, target);
  std::vector<char> keep(partition.size(), 0);
  for (const std::vector<std::size_t>& block : partition.blocks()) {
    bool meets = std::any_of(block.begin(), block.end(),
                             [&](std::size_t m) { return mask[m] != 0; });
    if (meets)
      for (std::size_t m : block) keep[m] = 1;
  }
  return collect(partition, keep);
}

ApproximationPair approximate(const Partition& partition,
                              std::span<const std::string> target) {
  ApproximationPair pair;
  pair.lower = lower_approximation(partition, target);
  pair.upper = upper_approximation(partition, target);
  pair.discernible = pair.lower == pair.upper;
  return pair;
}

Partition joint_partition(std::span<const Partition> partitions) {
  if (partitions.empty()) throw std::invalid_argument("need at least one partition");
  const Partition& first = partitions.front();
  for (const Partition& p : partitions.subspan(1))
    if (p.universe() != first.universe())
      fail(ErrorCode::UniverseMismatch, "partitions cover different universes");

  // Two objects stay together iff their block-index signatures agree.
  std::size_t n = first.size();
  std::vector<std::size_t> assignment(n, 0);
  std::vector<std::vector<std::size_t>> signatures(n);
  for (std::size_t i = 0; i < n; ++i) {
    signatures[i].reserve(partitions.size());
    for (const Partition& p : partitions) signatures[i].push_back(p.block_of(i));
  }
  std::vector<std::size_t> representative;  // first object seen per distinct signature
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t label = representative.size();
    for (std::size_t r = 0; r < representative.size(); ++r)
      if (signatures[representative[r]] == signatures[i]) {
        label = r;
        break;
      }
    if (label == representative.size()) representative.push_back(i);
    assignment[i] = label;
  }
  return Partition(first.universe(), assignment);
}

}  // namespace rse
