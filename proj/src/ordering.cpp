#include "rse/ordering.hpp"

#include <algorithm>
#include <stdexcept>

#include "rse/error.hpp"

namespace rse {

std::vector<OrderedClass> order_classes(const Partition& partition,
                                        std::span<const Value> column,
                                        const AttributeSpec& spec) {
  if (column.size() != partition.size())
    throw std::invalid_argument("column size does not match partition");

  std::vector<OrderedClass> classes;
  classes.reserve(partition.block_count());
  for (const std::vector<std::size_t>& block : partition.blocks()) {
    OrderedClass entry;
    entry.members = block;
    if (spec.kind == AttributeKind::Numeric) {
      double sum = 0.0;
      for (std::size_t m : block) sum += std::get<double>(column[m]);
      entry.mean = sum / static_cast<double>(block.size());
    } else {
      entry.label = std::get<std::string>(column[block.front()]);
      for (std::size_t m : block)
        if (std::get<std::string>(column[m]) != entry.label)
          fail(ErrorCode::AmbiguousCategory,
               "attribute " + spec.name + ": a class mixes '" + entry.label + "' and '" +
                   std::get<std::string>(column[m]) + "'");
    }
    classes.push_back(std::move(entry));
  }

  auto label_rank = [&](const OrderedClass& c) {
    auto it = std::find(spec.label_order.begin(), spec.label_order.end(), c.label);
    return it - spec.label_order.begin();
  };
  std::sort(classes.begin(), classes.end(),
            [&](const OrderedClass& a, const OrderedClass& b) {
              if (spec.kind == AttributeKind::Categorical) {
                // label_order lists the best label first; blocks are
                // label-pure, so ranks never tie.
                return label_rank(a) < label_rank(b);
              }
              if (a.mean != b.mean)
                return spec.polarity == Polarity::HigherBetter ? a.mean > b.mean
                                                               : a.mean < b.mean;
              return a.members.front() < b.members.front();
            });
  return classes;
}

GradedTable::GradedTable(std::vector<std::string> objects,
                         std::vector<std::string> attributes, int scale)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      scale_(scale),
      grades_(objects_.size() * attributes_.size(), 0),
      labels_(objects_.size() * attributes_.size()) {}

int GradedTable::grade(std::size_t obj, std::size_t attr) const {
  return grades_.at(obj * attributes_.size() + attr);
}

const std::string& GradedTable::label(std::size_t obj, std::size_t attr) const {
  return labels_.at(obj * attributes_.size() + attr);
}

int GradedTable::grade(std::string_view obj, std::string_view attr) const {
  return grade(require_object(obj), require_attribute(attr));
}

std::size_t GradedTable::require_object(std::string_view id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == id) return i;
  fail(ErrorCode::UnknownObject, "object '" + std::string(id) + "'");
}

std::size_t GradedTable::require_attribute(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i] == name) return i;
  fail(ErrorCode::UnknownAttribute, "attribute '" + std::string(name) + "'");
}

void GradedTable::set(std::size_t obj, std::size_t attr, int grade, std::string label) {
  grades_.at(obj * attributes_.size() + attr) = grade;
  labels_.at(obj * attributes_.size() + attr) = std::move(label);
}

GradedTable assign_grades(
    std::vector<std::string> objects, std::vector<std::string> attributes,
    const std::vector<std::vector<OrderedClass>>& classes_per_attribute, int scale,
    std::span<const std::string> comment_labels,
    const std::map<std::string, std::vector<GradeOverride>>& overrides) {
  if (classes_per_attribute.size() != attributes.size())
    throw std::invalid_argument("one ordered class list per attribute required");
  if (scale < 1) fail(ErrorCode::ConfigFormat, "scale must be at least 1");
  if (comment_labels.size() < static_cast<std::size_t>(scale))
    fail(ErrorCode::ConfigFormat, "need at least " + std::to_string(scale) +
                                      " comment labels for the scale");

  GradedTable table(std::move(objects), std::move(attributes), scale);
  for (std::size_t a = 0; a < table.attributes().size(); ++a) {
    const std::string& name = table.attributes()[a];
    const std::vector<OrderedClass>& classes = classes_per_attribute[a];
    if (classes.size() > static_cast<std::size_t>(scale))
      fail(ErrorCode::ScaleTooSmall, "attribute " + name + " has " +
                                         std::to_string(classes.size()) +
                                         " classes but the scale is " + std::to_string(scale));
    const std::vector<GradeOverride>* custom = nullptr;
    if (auto it = overrides.find(name); it != overrides.end()) {
      if (it->second.size() != classes.size())
        fail(ErrorCode::ConfigFormat,
             "grade_overrides." + name + " has " + std::to_string(it->second.size()) +
                 " entries but the attribute has " + std::to_string(classes.size()) +
                 " classes");
      for (const GradeOverride& entry : it->second)
        if (entry.grade > scale)
          fail(ErrorCode::ConfigFormat,
               "grade_overrides." + name + ": grade above the scale");
      custom = &it->second;
    }
    std::vector<char> seen(table.objects().size(), 0);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      int grade = custom ? (*custom)[k].grade : scale - static_cast<int>(k);
      const std::string& label = custom ? (*custom)[k].label : comment_labels[k];
      for (std::size_t m : classes[k].members) {
        if (m >= seen.size() || seen[m])
          throw std::invalid_argument("classes must cover each object exactly once");
        seen[m] = 1;
        table.set(m, a, grade, label);
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("classes must cover the whole universe");
  }
  return table;
}

bool dominates(const GradedTable& table, std::string_view x, std::string_view y,
               std::span<const std::string> attributes, bool strict) {
  if (attributes.empty()) throw std::invalid_argument("attribute set must be non-empty");
  std::size_t xi = table.require_object(x);
  std::size_t yi = table.require_object(y);
  bool strictly_better_somewhere = false;
  for (const std::string& name : attributes) {
    std::size_t a = table.require_attribute(name);
    if (table.grade(xi, a) < table.grade(yi, a)) return false;
    if (table.grade(xi, a) > table.grade(yi, a)) strictly_better_somewhere = true;
  }
  return strict ? strictly_better_somewhere : true;
}

}  // namespace rse
