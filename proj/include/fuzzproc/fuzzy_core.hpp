// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzproc/rational.hpp"

namespace fuzzproc {

/// Quantized membership grade: exactly one of 0, 1/4, 1/2, 3/4, 1, stored as
/// a quarter count so the five levels stay exact.
class Grade {
 public:
  constexpr Grade() = default;

  static Grade from_quarters(int quarters);

  int quarters() const { return quarters_; }
  Rational value() const { return Rational(quarters_, 4); }
  bool is_zero() const { return quarters_ == 0; }

  friend auto operator<=>(const Grade&, const Grade&) = default;

 private:
  int quarters_ = 0;
};

/// How many entities of a group landed on each label at one stage. counts
/// must partition group_size: every entity receives exactly one label.
struct StageCounts {
  std::int64_t group_size = 0;
  std::vector<std::int64_t> counts;

  bool operator==(const StageCounts&) const = default;
};

/// Throws ValidationError unless counts are nonnegative, none exceeds the
/// group size and they sum to it; stage_name is used in the message when given.
void validate_counts(const StageCounts& counts, std::string_view stage_name = {});

/// The five-band count quantizer. Bands are tied to the group size n:
///   grade 0 on [0, n/5], and 1/4, 1/2, 3/4, 1 on the following (j*n/5, (j+1)*n/5]
/// intervals. All comparisons are exact integer tests on 5*count vs multiples
/// of n, so group sizes not divisible by 5 need no rounding rule.
Grade grade_from_count(std::int64_t count, std::int64_t group_size);

/// One grade per label for a single process stage.
class FuzzyStageSet {
 public:
  FuzzyStageSet(std::string stage_name, std::vector<Grade> grades);

  const std::string& stage_name() const { return stage_name_; }
  int levels() const { return static_cast<int>(grades_.size()); }
  Grade grade(int label) const { return grades_[static_cast<std::size_t>(label)]; }
  std::span<const Grade> grades() const { return grades_; }

  bool all_zero() const;
  Rational grade_sum() const;

  bool operator==(const FuzzyStageSet&) const = default;

 private:
  std::string stage_name_;
  std::vector<Grade> grades_;
};

/// Applies grade_from_count to every label of the stage; validates counts.
FuzzyStageSet stage_fuzzy_set(const StageCounts& counts, std::string stage_name);

/// Label weights rescaled to sum exactly to 1.
class NormalizedFuzzySet {
 public:
  explicit NormalizedFuzzySet(std::vector<Rational> weights);

  int levels() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int label) const { return weights_[static_cast<std::size_t>(label)]; }
  std::span<const Rational> weights() const { return weights_; }

  bool operator==(const NormalizedFuzzySet&) const = default;

 private:
  std::vector<Rational> weights_;
};

/// Divides each grade by the grade sum. Throws DegenerateError when every
/// grade is zero (the stage name is part of the message).
NormalizedFuzzySet normalize(const FuzzyStageSet& set);

/// Same rescaling for arbitrary nonnegative weights.
NormalizedFuzzySet normalize(std::span<const Rational> weights);

}  // namespace fuzzproc
