#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rse {

// A partition of a fixed, ordered universe of object ids into disjoint
// blocks. Blocks are kept canonical: members ascending by input position,
// blocks ordered by their smallest member. Two partitions compare equal
// iff they have the same universe and the same blocks.
class Partition {
public:
  // Empty partition over the empty universe.
  Partition() = default;

  // block_assignment[i] names the block of object i; labels are arbitrary,
  // only equality matters.
  Partition(std::vector<std::string> universe,
            const std::vector<std::size_t>& block_assignment);

  static Partition single_block(std::vector<std::string> universe);
  static Partition discrete(std::vector<std::string> universe);

  // Blocks given explicitly; must cover the universe without overlap.
  static Partition from_blocks(std::vector<std::string> universe,
                               const std::vector<std::vector<std::size_t>>& blocks);

  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(std::size_t object) const { return block_of_.at(object); }
  bool same_block(std::size_t a, std::size_t b) const {
    return block_of_.at(a) == block_of_.at(b);
  }

  // True when every block of this partition sits inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const = default;

  // Blocks by object id, e.g. {{i1,i3},{i2}}, for reports and messages.
  std::vector<std::vector<std::string>> named_blocks() const;

private:
  std::vector<std::string> universe_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

}  // namespace rse
