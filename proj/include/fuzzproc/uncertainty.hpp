// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fuzzproc/profile_space.hpp"

namespace fuzzproc {

/// Possibility values sorted non-increasing, r_1 >= r_2 >= ...; an implicit
/// trailing zero r_{m+1} = 0 is assumed by the measures. Trailing zeros in the
/// stored sequence are retained and do not change any measure.
class OrderedPossibilityDistribution {
 public:
  /// Direct construction from already-sorted values in [0, 1]; rejects
  /// increasing steps. Useful for feeding reference distributions verbatim.
  static OrderedPossibilityDistribution from_values(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  explicit OrderedPossibilityDistribution(std::vector<double> values)
      : values_(std::move(values)) {}

  std::vector<double> values_;
};

/// Sorts all weights of a possibility distribution non-increasing (stable, so
/// ties keep lexicographic profile order) and converts them to binary64.
OrderedPossibilityDistribution ordered_possibility(const ProfileDistribution& distribution);

/// Strife: sum over i >= 2 of (r_i - r_{i+1}) * log2(i / sum_{j<=i} r_j).
/// Zero jumps contribute nothing; crisp or empty distributions give 0.
double strife(const OrderedPossibilityDistribution& r);

/// Non-specificity: sum over i >= 2 of (r_i - r_{i+1}) * log2(i).
double nonspecificity(const OrderedPossibilityDistribution& r);

/// strife + nonspecificity.
double total_uncertainty(const OrderedPossibilityDistribution& r);

/// Normalized Shannon entropy -(1/ln normalizer) * sum m*ln m over the profile
/// weights, with 0*ln 0 = 0. Every weight must lie in [0, 1]. The pipeline
/// normalizes by the profile count levels^stages.
double shannon_entropy(const ProfileDistribution& distribution, std::int64_t normalizer);

struct UncertaintyReport {
  double strife = 0.0;
  double nonspecificity = 0.0;
  double total = 0.0;  // always strife + nonspecificity
  double shannon = 0.0;

  bool operator==(const UncertaintyReport&) const = default;
};

}  // namespace fuzzproc
