#include "rse/report.hpp"

#include <algorithm>
#include <sstream>

#include "rse/format.hpp"

namespace rse {
namespace {

using nlohmann::json;

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

// Width of the widest entry in a column.
std::size_t width_of(const std::vector<std::string>& entries) {
  std::size_t w = 0;
  for (const std::string& e : entries) w = std::max(w, e.size());
  return w;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out + "}";
}

json pairs_to_json(const std::vector<std::pair<std::string, double>>& pairs) {
  json out = json::object();
  for (const auto& [name, value] : pairs) out[name] = value;
  return out;
}

json pairs_to_json_3dp(const std::vector<std::pair<std::string, double>>& pairs) {
  json out = json::object();
  for (const auto& [name, value] : pairs) out[name] = render_3dp(value);
  return out;
}

}  // namespace

json partition_to_json(const Partition& partition) {
  json out = json::array();
  for (const std::vector<std::string>& block : partition.named_blocks()) out.push_back(block);
  return out;
}

json level_to_json(const LevelResult& level) {
  json out;
  out["level"] = level.level_id;
  out["alpha"] = level.alpha;
  out["scale"] = level.scale;
  out["attributes"] = level.attribute_order;

  json partitions = json::object();
  for (const auto& [name, partition] : level.partitions)
    partitions[name] = partition_to_json(partition);
  out["partitions"] = partitions;
  out["joint_partition"] = partition_to_json(level.joint);

  json classes = json::object();
  for (std::size_t a = 0; a < level.attribute_order.size(); ++a) {
    json list = json::array();
    for (const OrderedClass& c : level.classes[a]) {
      json entry;
      std::vector<std::string> members;
      for (std::size_t m : c.members) members.push_back(level.graded.objects()[m]);
      entry["members"] = members;
      entry["grade"] = level.graded.grade(c.members.front(), a);
      entry["comment"] = level.graded.label(c.members.front(), a);
      if (c.label.empty())
        entry["mean"] = c.mean;
      else
        entry["label"] = c.label;
      list.push_back(entry);
    }
    classes[level.attribute_order[a]] = list;
  }
  out["classes"] = classes;

  json grades = json::array();
  for (std::size_t o = 0; o < level.graded.objects().size(); ++o) {
    json row;
    row["id"] = level.graded.objects()[o];
    json cells = json::object();
    for (std::size_t a = 0; a < level.attribute_order.size(); ++a)
      cells[level.attribute_order[a]] = {{"grade", level.graded.grade(o, a)},
                                         {"comment", level.graded.label(o, a)}};
    row["cells"] = cells;
    grades.push_back(row);
  }
  out["grades"] = grades;

  out["entropy"] = {{"h_full", level.weight_report.h_full},
                    {"h_full_3dp", render_3dp(level.weight_report.h_full)},
                    {"h_drop", pairs_to_json(level.weight_report.h_drop)},
                    {"h_drop_3dp", pairs_to_json_3dp(level.weight_report.h_drop)},
                    {"sgf", pairs_to_json(level.weight_report.sgf)},
                    {"sgf_3dp", pairs_to_json_3dp(level.weight_report.sgf)}};
  out["redundant"] = level.weight_report.redundant;
  out["weights"] = pairs_to_json(level.weight_report.weights);
  out["weights_3dp"] = pairs_to_json_3dp(level.weight_report.weights);

  json scores = json::array();
  for (const auto& [id, score] : level.scores)
    scores.push_back({{"id", id}, {"score", score}, {"score_3dp", render_3dp(score)}});
  out["scores"] = scores;

  json ranking = json::array();
  for (const RankEntry& entry : rank_within_level(level))
    ranking.push_back({{"id", entry.id},
                       {"score", entry.score},
                       {"score_3dp", render_3dp(entry.score)},
                       {"rank", entry.rank}});
  out["ranking"] = ranking;

  out["diagnostics"] = level.diagnostics;
  return out;
}

json report_to_json(const EvaluationReport& report) {
  json out;
  out["schema_version"] = 1;
  out["config"] = {{"alpha", report.config.alpha},
                   {"log_base", report.config.log_base},
                   {"redundancy_epsilon", report.config.redundancy_epsilon},
                   {"comment_labels", report.config.comment_labels}};
  out["levels"] = json::array();
  for (const LevelResult& level : report.levels) out["levels"].push_back(level_to_json(level));

  json overall = json::array();
  if (!report.levels.empty()) {
    for (const auto& [id, first_score] : report.levels.front().scores) {
      json row;
      row["id"] = id;
      json scores = json::object();
      json scores_3dp = json::object();
      for (const LevelResult& level : report.levels) {
        double s = level.score_of(id);
        scores[level.level_id] = s;
        scores_3dp[level.level_id] = render_3dp(s);
      }
      row["scores"] = scores;
      row["scores_3dp"] = scores_3dp;
      overall.push_back(row);
    }
  }
  out["overall"] = overall;
  return out;
}

std::string partition_to_text(const Partition& partition) {
  std::vector<std::vector<std::string>> blocks = partition.named_blocks();
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += " | ";
    out += join_ids(blocks[b]);
  }
  return out;
}

std::string grades_to_text(const LevelResult& level) {
  const GradedTable& table = level.graded;
  std::vector<std::string> id_col = {"id"};
  for (const std::string& id : table.objects()) id_col.push_back(id);
  std::size_t id_width = width_of(id_col);

  std::ostringstream out;
  out << pad("id", id_width);
  for (const std::string& name : table.attributes()) out << "  " << name;
  out << '\n';
  for (std::size_t o = 0; o < table.objects().size(); ++o) {
    out << pad(table.objects()[o], id_width);
    for (std::size_t a = 0; a < table.attributes().size(); ++a)
      out << "  " << pad(std::to_string(table.grade(o, a)), table.attributes()[a].size());
    out << '\n';
  }
  return out.str();
}

std::string entropy_to_text(const LevelResult& level) {
  const WeightReport& wr = level.weight_report;
  std::vector<std::string> names = {"attribute"};
  for (const auto& [name, _] : wr.sgf) names.push_back(name);
  std::size_t name_width = width_of(names);

  std::ostringstream out;
  out << "H(all attributes) = " << render_3dp(wr.h_full) << '\n';
  out << pad("attribute", name_width) << "  H(without)  significance  weight\n";
  for (std::size_t i = 0; i < wr.sgf.size(); ++i) {
    const std::string& name = wr.sgf[i].first;
    out << pad(name, name_width) << "  " << pad(render_3dp(wr.h_drop[i].second), 10) << "  "
        << pad(render_3dp(wr.sgf[i].second), 12) << "  ";
    if (wr.is_redundant(name))
      out << "redundant";
    else
      out << render_3dp(wr.weight_of(name));
    out << '\n';
  }
  return out.str();
}

std::string level_to_text(const LevelResult& level) {
  std::ostringstream out;
  out << "Level " << level.level_id << " (alpha " << format_double(level.alpha) << ", scale "
      << level.scale << ")\n";

  out << "\nPartitions\n";
  std::size_t name_width = width_of(level.attribute_order);
  for (const auto& [name, partition] : level.partitions)
    out << "  " << pad(name, name_width) << "  " << partition_to_text(partition) << '\n';
  out << "  " << pad("joint", name_width) << "  " << partition_to_text(level.joint) << '\n';

  out << "\nClasses (best first)\n";
  for (std::size_t a = 0; a < level.attribute_order.size(); ++a) {
    out << "  " << level.attribute_order[a] << ":\n";
    for (const OrderedClass& c : level.classes[a]) {
      std::vector<std::string> members;
      for (std::size_t m : c.members) members.push_back(level.graded.objects()[m]);
      out << "    grade " << level.graded.grade(c.members.front(), a) << " ("
          << level.graded.label(c.members.front(), a) << "): " << join_ids(members);
      if (c.label.empty())
        out << "  mean " << format_double(c.mean);
      else
        out << "  label " << c.label;
      out << '\n';
    }
  }

  out << "\nGrades\n" << grades_to_text(level);
  out << "\nEntropy\n" << entropy_to_text(level);

  out << "\nScores\n";
  std::vector<std::string> ids = {"id"};
  for (const auto& [id, _] : level.scores) ids.push_back(id);
  std::size_t id_width = width_of(ids);
  out << "  rank  " << pad("id", id_width) << "  score\n";
  for (const RankEntry& entry : rank_within_level(level))
    out << "  " << pad(std::to_string(entry.rank), 4) << "  " << pad(entry.id, id_width)
        << "  " << render_3dp(entry.score) << '\n';

  if (!level.diagnostics.empty()) {
    out << "\nNotes\n";
    for (const std::string& note : level.diagnostics) out << "  - " << note << '\n';
  }
  return out.str();
}

std::string report_to_text(const EvaluationReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    if (i) out << '\n';
    out << level_to_text(report.levels[i]);
  }
  if (report.levels.size() > 1) {
    out << "\nOverall scores\n";
    std::vector<std::string> ids = {"id"};
    for (const auto& [id, _] : report.levels.front().scores) ids.push_back(id);
    std::size_t id_width = width_of(ids);
    out << pad("id", id_width);
    for (const LevelResult& level : report.levels) out << "  " << level.level_id;
    out << '\n';
    for (const auto& [id, _] : report.levels.front().scores) {
      out << pad(id, id_width);
      for (const LevelResult& level : report.levels)
        out << "  " << pad(render_3dp(level.score_of(id)), level.level_id.size());
      out << '\n';
    }
  }
  return out.str();
}

std::string grades_to_csv(const LevelResult& level) {
  std::ostringstream out;
  out << "id";
  for (const std::string& name : level.graded.attributes()) out << ',' << name;
  out << '\n';
  for (std::size_t o = 0; o < level.graded.objects().size(); ++o) {
    out << level.graded.objects()[o];
    for (std::size_t a = 0; a < level.graded.attributes().size(); ++a)
      out << ',' << level.graded.grade(o, a);
    out << '\n';
  }
  return out.str();
}

std::string entropy_to_csv(const LevelResult& level) {
  const WeightReport& wr = level.weight_report;
  std::ostringstream out;
  out << "attribute,h_without,significance,weight,redundant\n";
  for (std::size_t i = 0; i < wr.sgf.size(); ++i) {
    const std::string& name = wr.sgf[i].first;
    out << name << ',' << format_double(wr.h_drop[i].second) << ','
        << format_double(wr.sgf[i].second) << ',' << format_double(wr.weight_of(name)) << ','
        << (wr.is_redundant(name) ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string scores_to_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out << "level,id,score,score_3dp,rank\n";
  for (const LevelResult& level : report.levels) {
    std::vector<RankEntry> ranking = rank_within_level(level);
    for (const auto& [id, score] : level.scores) {
      int rank = 0;
      for (const RankEntry& entry : ranking)
        if (entry.id == id) rank = entry.rank;
      out << level.level_id << ',' << id << ',' << format_double(score) << ','
          << render_3dp(score) << ',' << rank << '\n';
    }
  }
  return out.str();
}

}  // namespace rse
