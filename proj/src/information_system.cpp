#include "rse/information_system.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "rse/error.hpp"
#include "rse/format.hpp"

namespace rse {
namespace {

// Plain comma-separated fields; values must not themselves contain commas.
std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<std::string> split_lines(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  // Ignore a trailing newline at end of file.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

double parse_number(const std::string& field, const std::string& where) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v))
    fail(ErrorCode::InvalidNumber, "cell " + where + ": '" + field + "' is not a number");
  return v;
}

void check_cell(const Value& v, const AttributeSpec& spec, const std::string& where) {
  if (spec.kind == AttributeKind::Numeric) {
    if (!std::holds_alternative<double>(v))
      fail(ErrorCode::InvalidNumber, "cell " + where + ": expected a number");
    double x = std::get<double>(v);
    if (x < 0.0 || x > spec.range)
      fail(ErrorCode::OutOfRange, "cell " + where + ": " + format_double(x) +
                                      " outside [0, " + format_double(spec.range) + "]");
  } else {
    if (!std::holds_alternative<std::string>(v))
      fail(ErrorCode::UnknownLabel, "cell " + where + ": expected a label");
    const std::string& s = std::get<std::string>(v);
    if (std::find(spec.label_order.begin(), spec.label_order.end(), s) ==
        spec.label_order.end())
      fail(ErrorCode::UnknownLabel, "cell " + where + ": label '" + s +
                                        "' not in the order for " + spec.name);
  }
}

}  // namespace

void AttributeSpec::validate() const {
  if (name.empty()) fail(ErrorCode::ConfigFormat, "attribute with empty name");
  if (kind == AttributeKind::Numeric) {
    if (!(range > 0.0) || !std::isfinite(range))
      fail(ErrorCode::ConfigFormat, "attribute " + name + ": range must be a positive number");
    if (!label_order.empty())
      fail(ErrorCode::ConfigFormat, "attribute " + name + ": label order on a numeric attribute");
  } else {
    if (label_order.empty())
      fail(ErrorCode::ConfigFormat, "attribute " + name + ": categorical attribute needs a label order");
    std::set<std::string> seen;
    for (const std::string& label : label_order) {
      if (label.empty())
        fail(ErrorCode::ConfigFormat, "attribute " + name + ": empty label");
      if (!seen.insert(label).second)
        fail(ErrorCode::ConfigFormat, "attribute " + name + ": duplicate label '" + label + "'");
    }
  }
}

InformationSystem InformationSystem::load_csv(std::string_view csv_text,
                                              const std::vector<AttributeSpec>& specs) {
  std::vector<std::string> lines = split_lines(csv_text);
  if (lines.empty()) fail(ErrorCode::CsvFormat, "empty input");

  std::vector<std::string> header = split_fields(lines[0]);
  if (header.empty() || header[0] != "id")
    fail(ErrorCode::CsvFormat, "header must start with 'id'");

  // Column order in the file decides attribute order in the system.
  std::vector<AttributeSpec> ordered;
  std::set<std::string> header_names;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string& name = header[c];
    if (name.empty()) fail(ErrorCode::CsvFormat, "empty column name in header");
    if (!header_names.insert(name).second)
      fail(ErrorCode::CsvFormat, "duplicate column '" + name + "'");
    auto it = std::find_if(specs.begin(), specs.end(),
                           [&](const AttributeSpec& s) { return s.name == name; });
    if (it == specs.end())
      fail(ErrorCode::UnknownAttribute, "column '" + name + "' has no declared attribute");
    ordered.push_back(*it);
  }
  for (const AttributeSpec& spec : specs)
    if (!header_names.contains(spec.name))
      fail(ErrorCode::MissingCell, "declared attribute '" + spec.name + "' has no column");

  std::vector<std::string> objects;
  std::vector<Value> cells;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) fail(ErrorCode::CsvFormat, "blank line in body");
    std::vector<std::string> fields = split_fields(lines[r]);
    if (fields.size() != header.size())
      fail(ErrorCode::CsvFormat, "row '" + fields[0] + "' has " +
                                     std::to_string(fields.size()) + " fields, header has " +
                                     std::to_string(header.size()));
    if (fields[0].empty()) fail(ErrorCode::MissingCell, "row " + std::to_string(r) + " has no id");
    objects.push_back(fields[0]);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const std::string where = "(" + fields[0] + ", " + header[c] + ")";
      if (fields[c].empty()) fail(ErrorCode::MissingCell, "cell " + where + " is empty");
      if (ordered[c - 1].kind == AttributeKind::Numeric)
        cells.emplace_back(parse_number(fields[c], where));
      else
        cells.emplace_back(fields[c]);
    }
  }
  if (objects.empty()) fail(ErrorCode::MissingCell, "no data rows");
  return InformationSystem(std::move(objects), std::move(ordered), std::move(cells));
}

InformationSystem::InformationSystem(std::vector<std::string> objects,
                                     std::vector<AttributeSpec> attributes,
                                     std::vector<Value> cells)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      cells_(std::move(cells)) {
  validate();
}

void InformationSystem::validate() const {
  if (objects_.empty()) fail(ErrorCode::MissingCell, "no objects");
  if (cells_.size() != objects_.size() * attributes_.size())
    fail(ErrorCode::CsvFormat, "cell count does not match objects x attributes");
  for (const AttributeSpec& spec : attributes_) spec.validate();
  std::set<std::string_view> attr_names;
  for (const AttributeSpec& spec : attributes_)
    if (!attr_names.insert(spec.name).second)
      fail(ErrorCode::CsvFormat, "duplicate attribute '" + spec.name + "'");
  std::set<std::string_view> ids;
  for (const std::string& id : objects_) {
    if (id.empty()) fail(ErrorCode::MissingCell, "object with empty id");
    if (!ids.insert(id).second) fail(ErrorCode::DuplicateObjectId, "object '" + id + "'");
  }
  for (std::size_t o = 0; o < objects_.size(); ++o)
    for (std::size_t a = 0; a < attributes_.size(); ++a)
      check_cell(value(o, a), attributes_[a], "(" + objects_[o] + ", " + attributes_[a].name + ")");
}

std::string InformationSystem::to_csv() const {
  std::ostringstream out;
  out << "id";
  for (const AttributeSpec& spec : attributes_) out << ',' << spec.name;
  out << '\n';
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    out << objects_[o];
    for (std::size_t a = 0; a < attributes_.size(); ++a) {
      const Value& v = value(o, a);
      out << ',';
      if (std::holds_alternative<double>(v))
        out << format_double(std::get<double>(v));
      else
        out << std::get<std::string>(v);
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::size_t> InformationSystem::object_index(std::string_view id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> InformationSystem::attribute_index(std::string_view name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i].name == name) return i;
  return std::nullopt;
}

std::size_t InformationSystem::require_object(std::string_view id) const {
  if (auto i = object_index(id)) return *i;
  fail(ErrorCode::UnknownObject, "object '" + std::string(id) + "'");
}

const AttributeSpec& InformationSystem::attribute(std::string_view name) const {
  if (auto i = attribute_index(name)) return attributes_[*i];
  fail(ErrorCode::UnknownAttribute, "attribute '" + std::string(name) + "'");
}

const Value& InformationSystem::value(std::size_t obj, std::size_t attr) const {
  return cells_.at(obj * attributes_.size() + attr);
}

double InformationSystem::numeric_value(std::size_t obj, std::size_t attr) const {
  return std::get<double>(value(obj, attr));
}

const std::string& InformationSystem::label_value(std::size_t obj, std::size_t attr) const {
  return std::get<std::string>(value(obj, attr));
}

std::vector<Value> InformationSystem::column(std::string_view name) const {
  auto idx = attribute_index(name);
  if (!idx) fail(ErrorCode::UnknownAttribute, "attribute '" + std::string(name) + "'");
  std::size_t a = *idx;
  std::vector<Value> out;
  out.reserve(objects_.size());
  for (std::size_t o = 0; o < objects_.size(); ++o) out.push_back(value(o, a));
  return out;
}

std::vector<double> InformationSystem::numeric_column(std::string_view name) const {
  std::vector<Value> col = column(name);
  std::vector<double> out;
  out.reserve(col.size());
  for (const Value& v : col) out.push_back(std::get<double>(v));
  return out;
}

std::vector<std::string> InformationSystem::label_column(std::string_view name) const {
  std::vector<Value> col = column(name);
  std::vector<std::string> out;
  out.reserve(col.size());
  for (const Value& v : col) out.push_back(std::get<std::string>(v));
  return out;
}

}  // namespace rse
