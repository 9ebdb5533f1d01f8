#include "rse/partition.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace rse {
namespace {

void check_universe(const std::vector<std::string>& universe) {
  std::set<std::string_view> seen;
  for (const std::string& id : universe)
    if (id.empty() || !seen.insert(id).second)
      throw std::invalid_argument("universe ids must be unique and non-empty");
}

}  // namespace

Partition::Partition(std::vector<std::string> universe,
                     const std::vector<std::size_t>& block_assignment) {
  check_universe(universe);
  if (block_assignment.size() != universe.size())
    throw std::invalid_argument("block assignment size does not match universe");
  universe_ = std::move(universe);
  block_of_.resize(universe_.size());
  std::map<std::size_t, std::size_t> label_to_block;
  for (std::size_t i = 0; i < block_assignment.size(); ++i) {
    auto [it, inserted] = label_to_block.emplace(block_assignment[i], blocks_.size());
    if (inserted) blocks_.emplace_back();
    blocks_[it->second].push_back(i);
    block_of_[i] = it->second;
  }
}

Partition Partition::single_block(std::vector<std::string> universe) {
  std::vector<std::size_t> assignment(universe.size(), 0);
  return Partition(std::move(universe), assignment);
}

Partition Partition::discrete(std::vector<std::string> universe) {
  std::vector<std::size_t> assignment(universe.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = i;
  return Partition(std::move(universe), assignment);
}

Partition Partition::from_blocks(std::vector<std::string> universe,
                                 const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::size_t> assignment(universe.size(), blocks.size());
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (std::size_t member : blocks[b]) {
      if (member >= universe.size() || assignment[member] != blocks.size())
        throw std::invalid_argument("blocks must cover each object exactly once");
      assignment[member] = b;
      ++covered;
    }
  }
  if (covered != universe.size())
    throw std::invalid_argument("blocks must cover the whole universe");
  return Partition(std::move(universe), assignment);
}

bool Partition::refines(const Partition& coarser) const {
  if (universe_ != coarser.universe_) return false;
  for (const std::vector<std::size_t>& block : blocks_)
    for (std::size_t member : block)
      if (!coarser.same_block(block.front(), member)) return false;
  return true;
}

std::vector<std::vector<std::string>> Partition::named_blocks() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(blocks_.size());
  for (const std::vector<std::size_t>& block : blocks_) {
    std::vector<std::string> names;
    names.reserve(block.size());
    for (std::size_t member : block) names.push_back(universe_[member]);
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace rse
