#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rse/attribute.hpp"

namespace rse {

using Value = std::variant<double, std::string>;

// An information system: a finite universe of objects, a set of typed
// attributes, and one value per (object, attribute) cell. Objects and
// attributes keep their input order; all downstream tie-breaking refers
// to these positions.
class InformationSystem {
public:
  // Rows are objects, columns are attributes. The csv must have a header
  // `id,<attr>,...`; every header column needs a spec and every spec needs
  // a column. Numeric cells are validated against [0, range], categorical
  // cells against the label order.
  static InformationSystem load_csv(std::string_view csv_text,
                                    const std::vector<AttributeSpec>& specs);

  InformationSystem(std::vector<std::string> objects,
                    std::vector<AttributeSpec> attributes,
                    std::vector<Value> cells);

  std::string to_csv() const;

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<AttributeSpec>& attributes() const { return attributes_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  std::optional<std::size_t> object_index(std::string_view id) const;
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  // Throw UnknownObject / UnknownAttribute on a miss.
  std::size_t require_object(std::string_view id) const;
  const AttributeSpec& attribute(std::string_view name) const;

  const Value& value(std::size_t obj, std::size_t attr) const;
  double numeric_value(std::size_t obj, std::size_t attr) const;
  const std::string& label_value(std::size_t obj, std::size_t attr) const;

  // Whole column for one attribute, in object order.
  std::vector<Value> column(std::string_view name) const;
  std::vector<double> numeric_column(std::string_view name) const;
  std::vector<std::string> label_column(std::string_view name) const;

private:
  std::vector<std::string> objects_;
  std::vector<AttributeSpec> attributes_;
  std::vector<Value> cells_;  // row-major, objects x attributes

  void validate() const;
};

}  // namespace rse
