// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

std::optional<int> parse_stage_index(std::string_view field) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

GroupDataset parse_structured(std::string_view text, const LabelSet& labels,
                              const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed group file: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("group file must be a JSON object");
  if (!doc.contains("groupSize") || !doc["groupSize"].is_number_integer())
    throw ValidationError("group file is missing an integer 'groupSize'");
  if (!doc.contains("stages") || !doc["stages"].is_array())
    throw ValidationError("group file is missing a 'stages' array");

  GroupDataset dataset;
  dataset.name = doc.value("groupName", options.fallback_group_name);
  dataset.size = doc["groupSize"].get<std::int64_t>();

  for (const json& stage : doc["stages"]) {
    if (!stage.is_object() || !stage.contains("counts") || !stage["counts"].is_object())
      throw ValidationError("every stage needs a 'counts' object");
    StageData data;
    data.name = stage.value("name", "S" + std::to_string(dataset.stages.size() + 1));
    data.counts.group_size = dataset.size;
    data.counts.counts.assign(static_cast<std::size_t>(labels.size()), 0);
    for (const auto& [key, value] : stage["counts"].items()) {
      auto index = labels.index_of(key);
      if (!index)
        throw ValidationError("unknown label '" + key + "' in stage '" + data.name + "'");
      if (!value.is_number_integer())
        throw ValidationError("count for label '" + key + "' in stage '" + data.name +
                              "' must be an integer");
      data.counts.counts[static_cast<std::size_t>(*index)] = value.get<std::int64_t>();
    }
    dataset.stages.push_back(std::move(data));
  }
  return dataset;
}

GroupDataset parse_tabular(std::string_view text, const LabelSet& labels,
                           const ParseOptions& options) {
  std::vector<std::string> stage_order;          // first-appearance order
  std::map<std::string, std::vector<std::int64_t>, std::less<>> counts;
  std::set<std::pair<std::string, std::string>> seen;  // (entity, stage)
  std::map<std::string, std::set<std::string>, std::less<>> stages_of_entity;
  bool numeric_stages = true;
  bool first_data_line = true;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line);
    if (fields.size() != 3)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'entity,stage,label'");
    if (first_data_line) {
      first_data_line = false;
      std::string third(fields[2]);
      std::transform(third.begin(), third.end(), third.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (third == "label") continue;  // header row
    }
    const std::string entity(fields[0]);
    const std::string stage(fields[1]);
    const std::string_view label = fields[2];
    auto label_index = labels.index_of(label);
    if (!label_index)
      throw ValidationError("line " + std::to_string(line_no) + ": unknown label '" +
                            std::string(label) + "'");
    if (!parse_stage_index(stage)) numeric_stages = false;
    if (!counts.contains(stage)) {
      stage_order.push_back(stage);
      counts[stage].assign(static_cast<std::size_t>(labels.size()), 0);
    }
    if (!seen.emplace(entity, stage).second)
      throw ValidationError("entity '" + entity + "' listed twice for stage '" + stage + "'");
    counts[stage][static_cast<std::size_t>(*label_index)] += 1;
    stages_of_entity[entity].insert(stage);
  }

  if (stage_order.size() < 2) throw ValidationError("a group needs at least 2 stages");
  for (const auto& [entity, present] : stages_of_entity)
    if (present.size() != stage_order.size())
      throw ValidationError("entity '" + entity + "' is missing a label for " +
                            std::to_string(stage_order.size() - present.size()) + " stage(s)");

  if (numeric_stages) {
    std::sort(stage_order.begin(), stage_order.end(),
              [](const std::string& a, const std::string& b) {
                return *parse_stage_index(a) < *parse_stage_index(b);
              });
  }

  GroupDataset dataset;
  dataset.name = options.fallback_group_name;
  dataset.size = static_cast<std::int64_t>(stages_of_entity.size());

  std::vector<std::string> names;
  if (!options.stage_names.empty()) {
    names = options.stage_names;
  } else if (numeric_stages) {
    if (auto preset = stage_preset("mm"); preset && preset->size() == stage_order.size()) {
      names = *preset;
    } else {
      for (std::size_t i = 0; i < stage_order.size(); ++i)
        names.push_back("S" + std::to_string(i + 1));
    }
  } else {
    names = stage_order;
  }
  if (names.size() != stage_order.size())
    throw ValidationError("got " + std::to_string(names.size()) + " stage names for " +
                          std::to_string(stage_order.size()) + " stages");

  for (std::size_t i = 0; i < stage_order.size(); ++i) {
    StageData data;
    data.name = names[i];
    data.counts.group_size = dataset.size;
    data.counts.counts = counts[stage_order[i]];
    dataset.stages.push_back(std::move(data));
  }
  return dataset;
}

}  // namespace

void validate_dataset(const GroupDataset& dataset, const LabelSet& labels) {
  if (dataset.stages.size() < 2)
    throw ValidationError("group '" + dataset.name + "' needs at least 2 stages");
  for (const StageData& stage : dataset.stages) {
    if (static_cast<int>(stage.counts.counts.size()) != labels.size())
      throw ValidationError("stage '" + stage.name + "' has counts for " +
                            std::to_string(stage.counts.counts.size()) + " labels, expected " +
                            std::to_string(labels.size()));
    if (stage.counts.group_size != dataset.size)
      throw ValidationError("stage '" + stage.name + "' disagrees with the group size");
    validate_counts(stage.counts, stage.name);
  }
}

InputFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? InputFormat::Structured : InputFormat::Tabular;
  }
  return InputFormat::Tabular;
}

GroupDataset parse_group_file(std::string_view text, InputFormat format, const LabelSet& labels,
                              const ParseOptions& options) {
  if (format == InputFormat::Auto) format = detect_format(text);
  GroupDataset dataset = format == InputFormat::Structured ? parse_structured(text, labels, options)
                                                           : parse_tabular(text, labels, options);
  if (!options.stage_names.empty()) {
    if (options.stage_names.size() != dataset.stages.size())
      throw ValidationError("got " + std::to_string(options.stage_names.size()) +
                            " stage names for " + std::to_string(dataset.stages.size()) +
                            " stages");
    for (std::size_t i = 0; i < dataset.stages.size(); ++i)
      dataset.stages[i].name = options.stage_names[i];
  }
  validate_dataset(dataset, labels);
  return dataset;
}

std::optional<std::vector<std::string>> stage_preset(std::string_view name) {
  // presets are data; add new ones here
  if (name == "mm")
    return std::vector<std::string>{"Analysis/Mathematization", "Solution",
                                    "Validation/Implementation"};
  return std::nullopt;
}

}  // namespace fuzzproc
