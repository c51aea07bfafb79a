// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzproc/fuzzy_core.hpp"
#include "fuzzproc/labels.hpp"

namespace fuzzproc {

struct StageData {
  std::string name;
  StageCounts counts;

  bool operator==(const StageData&) const = default;
};

/// Raw observations for one group: how many entities landed on each label at
/// each stage. The same group size applies to every stage.
struct GroupDataset {
  std::string name;
  std::int64_t size = 0;
  std::vector<StageData> stages;

  bool operator==(const GroupDataset&) const = default;
};

/// Structural checks: at least 2 stages, per-stage counts cover exactly the
/// configured labels and partition the group size.
void validate_dataset(const GroupDataset& dataset, const LabelSet& labels);

enum class InputFormat { Auto, Structured, Tabular };

struct ParseOptions {
  /// Stage names to apply by position (from --stages); must match the stage
  /// count when non-empty.
  std::vector<std::string> stage_names;
  /// Group name used when the input does not carry one (tabular files).
  std::string fallback_group_name = "group";
};

/// Parses one group file.
///
/// Structured form (JSON): {"groupName": ..., "groupSize": n,
///   "stages": [{"name": ..., "counts": {"a": 0, "b": 0, ...}}, ...]}
/// Absent labels in a counts object mean zero.
///
/// Tabular form (CSV): one row per entity and stage, "entity,stage,label",
/// optional header row, '#' comment lines. Rows are aggregated by counting;
/// every entity must appear exactly once per stage. Stage fields may be names
/// or 1-based indices; purely numeric stages get names from options, from the
/// "mm" preset when there are three stages, or "S1".."Sk".
GroupDataset parse_group_file(std::string_view text, InputFormat format, const LabelSet& labels,
                              const ParseOptions& options = {});

InputFormat detect_format(std::string_view text);

/// Named stage-name presets; "mm" is the three-stage modelling split
/// Analysis/Mathematization, Solution, Validation/Implementation.
std::optional<std::vector<std::string>> stage_preset(std::string_view name);

}  // namespace fuzzproc
