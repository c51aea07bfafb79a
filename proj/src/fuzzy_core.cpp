// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/fuzzy_core.hpp"

#include <stdexcept>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {

Grade Grade::from_quarters(int quarters) {
  if (quarters < 0 || quarters > 4)
    throw std::invalid_argument("grade must be a quarter step in [0, 1]");
  Grade g;
  g.quarters_ = quarters;
  return g;
}

void validate_counts(const StageCounts& counts, std::string_view stage_name) {
  const std::string where =
      stage_name.empty() ? std::string() : " for stage '" + std::string(stage_name) + "'";
  if (counts.group_size < 1) throw ValidationError("group size must be positive" + where);
  std::int64_t sum = 0;
  for (std::int64_t c : counts.counts) {
    if (c < 0) throw ValidationError("negative count" + where);
    if (c > counts.group_size)
      throw ValidationError("count " + std::to_string(c) + " exceeds group size " +
                            std::to_string(counts.group_size) + where);
    sum += c;
  }
  if (sum != counts.group_size)
    throw ValidationError("counts" + where + " sum to " + std::to_string(sum) +
                          ", expected group size " + std::to_string(counts.group_size));
}

Grade grade_from_count(std::int64_t count, std::int64_t group_size) {
  if (group_size < 1) throw std::invalid_argument("group size must be positive");
  if (count < 0 || count > group_size)
    throw ValidationError("count " + std::to_string(count) + " exceeds group size " +
                          std::to_string(group_size));
  const std::int64_t scaled = 5 * count;
  int quarters = 4;
  if (scaled <= group_size)
    quarters = 0;
  else if (scaled <= 2 * group_size)
    quarters = 1;
  else if (scaled <= 3 * group_size)
    quarters = 2;
  else if (scaled <= 4 * group_size)
    quarters = 3;
  return Grade::from_quarters(quarters);
}

FuzzyStageSet::FuzzyStageSet(std::string stage_name, std::vector<Grade> grades)
    : stage_name_(std::move(stage_name)), grades_(std::move(grades)) {
  if (grades_.empty()) throw ValidationError("fuzzy stage set needs at least one grade");
}

bool FuzzyStageSet::all_zero() const {
  for (const Grade& g : grades_)
    if (!g.is_zero()) return false;
  return true;
}

Rational FuzzyStageSet::grade_sum() const {
  Rational sum;
  for (const Grade& g : grades_) sum += g.value();
  return sum;
}

FuzzyStageSet stage_fuzzy_set(const StageCounts& counts, std::string stage_name) {
  validate_counts(counts, stage_name);
  std::vector<Grade> grades;
  grades.reserve(counts.counts.size());
  for (std::int64_t c : counts.counts) grades.push_back(grade_from_count(c, counts.group_size));
  return FuzzyStageSet(std::move(stage_name), std::move(grades));
}

NormalizedFuzzySet::NormalizedFuzzySet(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  Rational sum;
  for (const Rational& w : weights_) {
    if (w.is_negative()) throw ValidationError("normalized weights must be nonnegative");
    sum += w;
  }
  if (sum != Rational(1)) throw ValidationError("normalized weights must sum to 1, got " + sum.str());
}

NormalizedFuzzySet normalize(const FuzzyStageSet& set) {
  if (set.all_zero())
    throw DegenerateError("all membership grades are zero for stage '" + set.stage_name() +
                          "'; normalization is undefined");
  const Rational sum = set.grade_sum();
  std::vector<Rational> weights;
  weights.reserve(static_cast<std::size_t>(set.levels()));
  for (const Grade& g : set.grades()) weights.push_back(g.value() / sum);
  return NormalizedFuzzySet(std::move(weights));
}

NormalizedFuzzySet normalize(std::span<const Rational> weights) {
  Rational sum;
  for (const Rational& w : weights) {
    if (w.is_negative()) throw ValidationError("weights must be nonnegative");
    sum += w;
  }
  if (sum.is_zero()) throw DegenerateError("all weights are zero; normalization is undefined");
  std::vector<Rational> out;
  out.reserve(weights.size());
  for (const Rational& w : weights) out.push_back(w / sum);
  return NormalizedFuzzySet(std::move(out));
}

}  // namespace fuzzproc
