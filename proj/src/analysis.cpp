// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/analysis.hpp"

#include <stdexcept>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {
namespace {

std::int64_t default_normalizer(int stages, int levels) {
  std::int64_t n = 1;
  for (int i = 0; i < stages; ++i) n *= levels;
  return n;
}

GroupAnalysis analyze_group(const GroupDataset& dataset, const LabelSet& labels,
                            std::int64_t normalizer) {
  validate_dataset(dataset, labels);

  GroupAnalysis group;
  group.name = dataset.name;
  group.size = dataset.size;

  std::vector<FuzzyStageSet> sets;
  sets.reserve(dataset.stages.size());
  for (const StageData& stage : dataset.stages)
    sets.push_back(stage_fuzzy_set(stage.counts, stage.name));

  // normalize first so an all-zero stage fails with the stage named
  for (std::size_t i = 0; i < sets.size(); ++i) {
    NormalizedFuzzySet normalized = normalize(sets[i]);
    CentroidPoint point = centroid(normalized);
    group.stages.push_back(StageAnalysis{dataset.stages[i].name, dataset.stages[i].counts,
                                         sets[i], std::move(normalized), point});
  }

  group.membership = membership_distribution(sets);
  group.probability = probabilities(group.membership);
  group.possibility = possibilities(group.membership);

  const OrderedPossibilityDistribution ordered = ordered_possibility(group.possibility);
  group.uncertainty.strife = strife(ordered);
  group.uncertainty.nonspecificity = nonspecificity(ordered);
  group.uncertainty.total = group.uncertainty.strife + group.uncertainty.nonspecificity;
  group.uncertainty.shannon = shannon_entropy(group.membership, normalizer);
  return group;
}

void check_shapes(std::span<const GroupDataset> datasets) {
  if (datasets.empty()) throw std::invalid_argument("no datasets given");
  const std::size_t stages = datasets.front().stages.size();
  for (const GroupDataset& d : datasets)
    if (d.stages.size() != stages)
      throw ValidationError("group '" + d.name + "' has " + std::to_string(d.stages.size()) +
                            " stages, expected " + std::to_string(stages));
}

CombinedView combined_view(std::span<const GroupAnalysis> groups, bool with_measures) {
  std::vector<ProfileDistribution> memberships;
  memberships.reserve(groups.size());
  for (const GroupAnalysis& g : groups) memberships.push_back(g.membership);

  CombinedView view;
  view.pseudo_frequency = pseudo_frequencies(memberships);
  view.probability = probabilities(view.pseudo_frequency);
  view.possibility = possibilities(view.pseudo_frequency);
  if (with_measures) {
    const OrderedPossibilityDistribution ordered = ordered_possibility(view.possibility);
    PossibilisticUncertainty u;
    u.strife = strife(ordered);
    u.nonspecificity = nonspecificity(ordered);
    u.total = u.strife + u.nonspecificity;
    view.uncertainty = u;
  }
  return view;
}

AnalysisReport make_report(std::span<const GroupDataset> datasets, const LabelSet& labels,
                           const AnalyzeOptions& options) {
  check_shapes(datasets);
  AnalysisReport report;
  report.labels = labels;
  for (const StageData& stage : datasets.front().stages) report.stage_names.push_back(stage.name);
  report.shannon_normalizer =
      options.shannon_normalizer > 0
          ? options.shannon_normalizer
          : default_normalizer(static_cast<int>(datasets.front().stages.size()), labels.size());
  report.epsilon = options.epsilon;
  return report;
}

}  // namespace

AnalysisReport analyze(const GroupDataset& dataset, const LabelSet& labels,
                       const AnalyzeOptions& options) {
  AnalysisReport report = make_report({&dataset, 1}, labels, options);
  report.groups.push_back(analyze_group(dataset, labels, report.shannon_normalizer));
  return report;
}

AnalysisReport compare_groups(std::span<const GroupDataset> datasets, const LabelSet& labels,
                              const AnalyzeOptions& options) {
  if (datasets.size() < 2) throw std::invalid_argument("compare needs at least 2 groups");
  AnalysisReport report = make_report(datasets, labels, options);
  for (const GroupDataset& dataset : datasets)
    report.groups.push_back(analyze_group(dataset, labels, report.shannon_normalizer));

  report.combined = combined_view(report.groups, options.combined_measures);

  const int stage_count = static_cast<int>(report.stage_names.size());
  for (std::size_t a = 0; a < report.groups.size(); ++a) {
    for (std::size_t b = a + 1; b < report.groups.size(); ++b) {
      for (int s = 0; s < stage_count; ++s) {
        StageComparison c;
        c.stage_index = s;
        c.first_group = report.groups[a].name;
        c.second_group = report.groups[b].name;
        c.outcome = compare_centroids(report.groups[a].stages[static_cast<std::size_t>(s)].centroid,
                                      report.groups[b].stages[static_cast<std::size_t>(s)].centroid,
                                      labels.size(), options.epsilon);
        report.comparisons.push_back(std::move(c));
      }
    }
  }
  return report;
}

AnalysisReport combine_groups(std::span<const GroupDataset> datasets, const LabelSet& labels,
                              const AnalyzeOptions& options) {
  if (datasets.size() < 2) throw std::invalid_argument("combine needs at least 2 groups");
  AnalysisReport report = make_report(datasets, labels, options);

  std::vector<GroupAnalysis> groups;
  groups.reserve(datasets.size());
  for (const GroupDataset& dataset : datasets)
    groups.push_back(analyze_group(dataset, labels, report.shannon_normalizer));

  report.combined = combined_view(groups, options.combined_measures);
  return report;
}

}  // namespace fuzzproc
