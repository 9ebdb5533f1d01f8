#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rse/config.hpp"
#include "rse/information_system.hpp"
#include "rse/partition.hpp"

namespace rse {

// One similarity class with the key used to order it among its siblings.
struct OrderedClass {
  std::vector<std::size_t> members;  // input positions, ascending
  double mean = 0.0;                 // numeric attributes: arithmetic mean of raw values
  std::string label;                 // categorical attributes: the shared label
};

// Ranks the blocks of a partition best-first. Numeric attributes order by
// block mean of the raw values (descending for higher-better, ascending for
// lower-better), ties broken towards the block whose smallest member comes
// first in input order. Categorical attributes order by the label_order of
// the attribute; each block must carry a single label (AmbiguousCategory).
std::vector<OrderedClass> order_classes(const Partition& partition,
                                        std::span<const Value> column,
                                        const AttributeSpec& spec);

// Grades for every object under every attribute of one level, on the scale
// 1..scale where scale is the best grade.
class GradedTable {
public:
  GradedTable() = default;
  GradedTable(std::vector<std::string> objects, std::vector<std::string> attributes,
              int scale);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  int scale() const { return scale_; }

  int grade(std::size_t obj, std::size_t attr) const;
  const std::string& label(std::size_t obj, std::size_t attr) const;
  int grade(std::string_view obj, std::string_view attr) const;

  std::size_t require_object(std::string_view id) const;      // UnknownObject
  std::size_t require_attribute(std::string_view name) const; // UnknownAttribute

  void set(std::size_t obj, std::size_t attr, int grade, std::string label);

private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  int scale_ = 0;
  std::vector<int> grades_;          // row-major, objects x attributes
  std::vector<std::string> labels_;
};

// Top-aligned grading: the best class of each attribute gets `scale`, the
// next gets scale-1, and so on; comments follow the grade. An override
// entry replaces both grade and comment for the listed attribute, best
// class first, and must match the class count exactly.
GradedTable assign_grades(
    std::vector<std::string> objects, std::vector<std::string> attributes,
    const std::vector<std::vector<OrderedClass>>& classes_per_attribute, int scale,
    std::span<const std::string> comment_labels,
    const std::map<std::string, std::vector<GradeOverride>>& overrides = {});

// True when x's grade is >= y's on every listed attribute; with strict set,
// additionally > on at least one. The attribute list must be non-empty.
bool dominates(const GradedTable& table, std::string_view x, std::string_view y,
               std::span<const std::string> attributes, bool strict = false);

}  // namespace rse
