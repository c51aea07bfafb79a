// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzproc/centroid.hpp"
#include "fuzzproc/dataset.hpp"
#include "fuzzproc/fuzzy_core.hpp"
#include "fuzzproc/labels.hpp"
#include "fuzzproc/profile_space.hpp"
#include "fuzzproc/uncertainty.hpp"

namespace fuzzproc {

struct AnalyzeOptions {
  /// Normalizer for the Shannon entropy; 0 means the default, the profile
  /// count levels^stages.
  std::int64_t shannon_normalizer = 0;
  /// Tolerance for centroid coordinate equality in comparisons.
  double epsilon = 1e-9;
  /// Also compute strife/non-specificity/total on the combined possibility
  /// distribution of multi-group runs.
  bool combined_measures = false;
};

struct StageAnalysis {
  std::string name;
  StageCounts counts;
  FuzzyStageSet fuzzy_set;
  NormalizedFuzzySet normalized;
  CentroidPoint centroid;

  bool operator==(const StageAnalysis&) const = default;
};

struct GroupAnalysis {
  std::string name;
  std::int64_t size = 0;
  std::vector<StageAnalysis> stages;
  ProfileDistribution membership;
  ProfileDistribution probability;
  ProfileDistribution possibility;
  UncertaintyReport uncertainty;

  bool operator==(const GroupAnalysis&) const = default;
};

/// Scalar measures available for combined distributions; no Shannon entropy
/// here since pseudo-frequencies may exceed 1.
struct PossibilisticUncertainty {
  double strife = 0.0;
  double nonspecificity = 0.0;
  double total = 0.0;

  bool operator==(const PossibilisticUncertainty&) const = default;
};

struct CombinedView {
  ProfileDistribution pseudo_frequency;
  ProfileDistribution probability;
  ProfileDistribution possibility;
  std::optional<PossibilisticUncertainty> uncertainty;

  bool operator==(const CombinedView&) const = default;
};

struct StageComparison {
  int stage_index = 0;
  std::string first_group;
  std::string second_group;
  ComparisonOutcome outcome;

  bool operator==(const StageComparison&) const = default;
};

/// Everything a run produces. Deterministic: the same input yields the same
/// report, field for field.
struct AnalysisReport {
  LabelSet labels;
  std::vector<std::string> stage_names;
  std::int64_t shannon_normalizer = 0;
  double epsilon = 1e-9;
  std::vector<GroupAnalysis> groups;
  std::optional<CombinedView> combined;
  std::vector<StageComparison> comparisons;

  bool operator==(const AnalysisReport&) const = default;
};

/// Full single-group pipeline: stage sets, membership/probability/possibility
/// distributions, uncertainty measures, per-stage normalized centroids.
AnalysisReport analyze(const GroupDataset& dataset, const LabelSet& labels,
                       const AnalyzeOptions& options = {});

/// Per-group analyses plus pseudo-frequencies, combined probability and
/// possibility, and pairwise per-stage centroid verdicts. All groups must
/// share the stage count.
AnalysisReport compare_groups(std::span<const GroupDataset> datasets, const LabelSet& labels,
                              const AnalyzeOptions& options = {});

/// Pseudo-frequency view only: the combined distributions without per-group
/// analyses; scalar measures only when options.combined_measures is set.
AnalysisReport combine_groups(std::span<const GroupDataset> datasets, const LabelSet& labels,
                              const AnalyzeOptions& options = {});

}  // namespace fuzzproc
