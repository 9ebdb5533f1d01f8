#include "rse/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rse/error.hpp"
#include "rse/information_system.hpp"

namespace rse {
namespace {

using nlohmann::json;

void expect_keys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.contains(it.key()))
      fail(ErrorCode::ConfigFormat, where + ": unexpected key '" + it.key() + "'");
}

double get_number(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    fail(ErrorCode::ConfigFormat, "'" + key + "' must be a number");
  return obj[key].get<double>();
}

std::vector<std::string> get_string_list(const json& value, const std::string& where) {
  if (!value.is_array())
    fail(ErrorCode::ConfigFormat, where + " must be an array of strings");
  std::vector<std::string> out;
  for (const json& item : value) {
    if (!item.is_string())
      fail(ErrorCode::ConfigFormat, where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

AttributeSpec parse_attribute(const json& entry) {
  if (!entry.is_object()) fail(ErrorCode::ConfigFormat, "attribute entry must be an object");
  expect_keys(entry, {"name", "kind", "range", "polarity", "labels"}, "attribute");
  AttributeSpec spec;
  if (!entry.contains("name") || !entry["name"].is_string())
    fail(ErrorCode::ConfigFormat, "attribute entry needs a string 'name'");
  spec.name = entry["name"].get<std::string>();
  std::string kind = entry.value("kind", "numeric");
  if (kind == "numeric")
    spec.kind = AttributeKind::Numeric;
  else if (kind == "categorical")
    spec.kind = AttributeKind::Categorical;
  else
    fail(ErrorCode::ConfigFormat, "attribute " + spec.name + ": unknown kind '" + kind + "'");
  std::string polarity = entry.value("polarity", "higher_better");
  if (polarity == "higher_better")
    spec.polarity = Polarity::HigherBetter;
  else if (polarity == "lower_better")
    spec.polarity = Polarity::LowerBetter;
  else
    fail(ErrorCode::ConfigFormat,
         "attribute " + spec.name + ": unknown polarity '" + polarity + "'");
  if (spec.kind == AttributeKind::Numeric) {
    if (!entry.contains("range"))
      fail(ErrorCode::ConfigFormat, "attribute " + spec.name + ": numeric kind needs 'range'");
    spec.range = get_number(entry, "range", 0.0);
  } else if (entry.contains("labels")) {
    spec.label_order = get_string_list(entry["labels"], "attribute " + spec.name + " labels");
  }
  return spec;
}

LevelSpec parse_level(const json& entry) {
  if (!entry.is_object()) fail(ErrorCode::ConfigFormat, "level entry must be an object");
  expect_keys(entry, {"id", "attributes", "alpha", "scale"}, "level");
  LevelSpec level;
  if (!entry.contains("id") || !entry["id"].is_string())
    fail(ErrorCode::ConfigFormat, "level entry needs a string 'id'");
  level.id = entry["id"].get<std::string>();
  if (!entry.contains("attributes"))
    fail(ErrorCode::ConfigFormat, "level " + level.id + " needs 'attributes'");
  level.attributes = get_string_list(entry["attributes"], "level " + level.id + " attributes");
  if (entry.contains("alpha")) level.alpha = get_number(entry, "alpha", 0.0);
  if (entry.contains("scale")) {
    if (!entry["scale"].is_number_integer())
      fail(ErrorCode::ConfigFormat, "level " + level.id + ": 'scale' must be an integer");
    level.scale = entry["scale"].get<int>();
  }
  return level;
}

}  // namespace

EvaluationConfig EvaluationConfig::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ConfigFormat, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::ConfigFormat, "top level must be an object");
  expect_keys(doc,
              {"version", "alpha", "log_base", "redundancy_epsilon", "comment_labels",
               "attributes", "levels", "grade_overrides"},
              "config");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kVersion)
    fail(ErrorCode::ConfigFormat, "missing or unsupported 'version' (expected " +
                                      std::to_string(kVersion) + ")");

  EvaluationConfig config;
  config.alpha = get_number(doc, "alpha", config.alpha);
  config.log_base = get_number(doc, "log_base", config.log_base);
  config.redundancy_epsilon = get_number(doc, "redundancy_epsilon", config.redundancy_epsilon);
  if (doc.contains("comment_labels"))
    config.comment_labels = get_string_list(doc["comment_labels"], "comment_labels");

  if (!doc.contains("attributes") || !doc["attributes"].is_array())
    fail(ErrorCode::ConfigFormat, "config needs an 'attributes' array");
  for (const json& entry : doc["attributes"])
    config.attributes.push_back(parse_attribute(entry));

  if (!doc.contains("levels") || !doc["levels"].is_array())
    fail(ErrorCode::ConfigFormat, "config needs a 'levels' array");
  for (const json& entry : doc["levels"]) config.levels.push_back(parse_level(entry));

  if (doc.contains("grade_overrides")) {
    const json& overrides = doc["grade_overrides"];
    if (!overrides.is_object())
      fail(ErrorCode::ConfigFormat, "'grade_overrides' must be an object");
    for (auto it = overrides.begin(); it != overrides.end(); ++it) {
      if (!it.value().is_array())
        fail(ErrorCode::ConfigFormat, "grade_overrides." + it.key() + " must be an array");
      std::vector<GradeOverride> list;
      for (const json& entry : it.value()) {
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("grade") ||
            !entry["label"].is_string() || !entry["grade"].is_number_integer())
          fail(ErrorCode::ConfigFormat,
               "grade_overrides." + it.key() + ": entries need 'label' and integer 'grade'");
        expect_keys(entry, {"label", "grade"}, "grade_overrides." + it.key());
        list.push_back({entry["label"].get<std::string>(), entry["grade"].get<int>()});
      }
      config.grade_overrides[it.key()] = std::move(list);
    }
  }

  config.validate();
  return config;
}

EvaluationConfig EvaluationConfig::from_file(const std::string& path) {
  return from_json_text(read_text_file(path));
}

std::string EvaluationConfig::to_json_text() const {
  json doc;
  doc["version"] = kVersion;
  doc["alpha"] = alpha;
  doc["log_base"] = log_base;
  doc["redundancy_epsilon"] = redundancy_epsilon;
  doc["comment_labels"] = comment_labels;
  doc["attributes"] = json::array();
  for (const AttributeSpec& spec : attributes) {
    json entry;
    entry["name"] = spec.name;
    entry["kind"] = spec.kind == AttributeKind::Numeric ? "numeric" : "categorical";
    entry["polarity"] =
        spec.polarity == Polarity::HigherBetter ? "higher_better" : "lower_better";
    if (spec.kind == AttributeKind::Numeric)
      entry["range"] = spec.range;
    else
      entry["labels"] = spec.label_order;
    doc["attributes"].push_back(entry);
  }
  doc["levels"] = json::array();
  for (const LevelSpec& level : levels) {
    json entry;
    entry["id"] = level.id;
    entry["attributes"] = level.attributes;
    if (level.alpha) entry["alpha"] = *level.alpha;
    if (level.scale) entry["scale"] = *level.scale;
    doc["levels"].push_back(entry);
  }
  if (!grade_overrides.empty()) {
    json overrides = json::object();
    for (const auto& [name, list] : grade_overrides) {
      json entries = json::array();
      for (const GradeOverride& o : list) entries.push_back({{"label", o.label}, {"grade", o.grade}});
      overrides[name] = entries;
    }
    doc["grade_overrides"] = overrides;
  }
  return doc.dump(2) + "\n";
}

void EvaluationConfig::validate() {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(ErrorCode::ConfigFormat, "alpha must lie in [0, 1]");
  if (!(log_base > 1.0) || !std::isfinite(log_base))
    fail(ErrorCode::ConfigFormat, "log_base must be greater than 1");
  if (!(redundancy_epsilon >= 0.0) || !std::isfinite(redundancy_epsilon))
    fail(ErrorCode::ConfigFormat, "redundancy_epsilon must be non-negative");
  if (comment_labels.empty()) fail(ErrorCode::ConfigFormat, "comment_labels must not be empty");
  std::set<std::string> label_set;
  for (const std::string& label : comment_labels) {
    if (label.empty()) fail(ErrorCode::ConfigFormat, "empty comment label");
    if (!label_set.insert(label).second)
      fail(ErrorCode::ConfigFormat, "duplicate comment label '" + label + "'");
  }

  if (attributes.empty()) fail(ErrorCode::ConfigFormat, "no attributes declared");
  std::set<std::string> attr_names;
  for (AttributeSpec& spec : attributes) {
    spec.validate();
    if (!attr_names.insert(spec.name).second)
      fail(ErrorCode::ConfigFormat, "duplicate attribute '" + spec.name + "'");
  }

  if (levels.empty()) fail(ErrorCode::ConfigFormat, "no levels declared");
  std::set<std::string> level_ids;
  std::map<std::string, std::string> owner;  // attribute -> level id
  for (const LevelSpec& level : levels) {
    if (level.id.empty()) fail(ErrorCode::ConfigFormat, "level with empty id");
    if (!level_ids.insert(level.id).second)
      fail(ErrorCode::ConfigFormat, "duplicate level '" + level.id + "'");
    if (level.attributes.empty())
      fail(ErrorCode::ConfigFormat, "level " + level.id + " has no attributes");
    if (level.alpha && !(*level.alpha >= 0.0 && *level.alpha <= 1.0))
      fail(ErrorCode::ConfigFormat, "level " + level.id + ": alpha must lie in [0, 1]");
    if (level.scale && *level.scale < 1)
      fail(ErrorCode::ConfigFormat, "level " + level.id + ": scale must be at least 1");
    for (const std::string& name : level.attributes) {
      if (!attr_names.contains(name))
        fail(ErrorCode::UnknownAttribute, "level " + level.id + " lists undeclared '" + name + "'");
      auto [it, inserted] = owner.emplace(name, level.id);
      if (!inserted)
        fail(ErrorCode::OverlappingLevels,
             "'" + name + "' appears in both " + it->second + " and " + level.id);
    }
  }
  for (AttributeSpec& spec : attributes) {
    auto it = owner.find(spec.name);
    if (it == owner.end())
      fail(ErrorCode::UncoveredAttribute, "'" + spec.name + "' belongs to no level");
    spec.level = it->second;
  }

  for (const auto& [name, list] : grade_overrides) {
    if (!attr_names.contains(name))
      fail(ErrorCode::UnknownAttribute, "grade_overrides lists undeclared '" + name + "'");
    if (list.empty())
      fail(ErrorCode::ConfigFormat, "grade_overrides." + name + " is empty");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].label.empty())
        fail(ErrorCode::ConfigFormat, "grade_overrides." + name + ": empty label");
      if (list[i].grade < 1)
        fail(ErrorCode::ConfigFormat, "grade_overrides." + name + ": grade below 1");
      if (i > 0 && list[i].grade >= list[i - 1].grade)
        fail(ErrorCode::ConfigFormat,
             "grade_overrides." + name + ": grades must strictly decrease");
    }
  }
}

const LevelSpec& EvaluationConfig::level(std::string_view id) const {
  for (const LevelSpec& level : levels)
    if (level.id == id) return level;
  fail(ErrorCode::UnknownLevel, "level '" + std::string(id) + "'");
}

double EvaluationConfig::level_alpha(const LevelSpec& level) const {
  return level.alpha.value_or(alpha);
}

void validate_config(const EvaluationConfig& config, const InformationSystem& system) {
  std::set<std::string> covered;
  for (const LevelSpec& level : config.levels)
    for (const std::string& name : level.attributes) {
      if (!system.attribute_index(name))
        fail(ErrorCode::UnknownAttribute,
             "level " + level.id + " lists '" + name + "', not in the data");
      if (!covered.insert(name).second)
        fail(ErrorCode::OverlappingLevels, "'" + name + "' appears in more than one level");
    }
  for (const AttributeSpec& spec : system.attributes())
    if (!covered.contains(spec.name))
      fail(ErrorCode::UncoveredAttribute, "'" + spec.name + "' belongs to no level");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ConfigFormat, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace rse
