// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <span>
#include <string_view>

#include "fuzzproc/fuzzy_core.hpp"
#include "fuzzproc/rational.hpp"

namespace fuzzproc {

/// Center of mass of the bar graph built from label weights: unit-width bars,
/// the first one on [0, 1]. Exact coordinates.
struct CentroidPoint {
  Rational x;
  Rational y;

  bool operator==(const CentroidPoint&) const = default;
};

/// Closed form for arbitrary nonnegative bar heights:
///   x_c = (1/2) * sum (2i-1) y_i / sum y_i
///   y_c = (1/2) * sum y_i^2   / sum y_i
/// Throws DegenerateError when every height is zero.
CentroidPoint centroid_general(std::span<const Rational> heights);

/// Specialization for weights that already sum to 1, so the divisors drop out.
CentroidPoint centroid(const NormalizedFuzzySet& set);

struct NumericCentroid {
  double x = 0.0;
  double y = 0.0;
};

/// Verification route: midpoint-rule integration of the moment integrals over
/// the union of bar rectangles, never using the closed form above.
NumericCentroid centroid_by_integration(std::span<const double> heights, int samples_per_bar = 32);

enum class Verdict { FirstBetter, SecondBetter, Tie };
enum class ComparisonRule { BiggerX, EqualXHighBranch, EqualXLowBranch, Identical };

std::string_view to_string(Verdict verdict);
std::string_view to_string(ComparisonRule rule);

struct ComparisonOutcome {
  Verdict verdict = Verdict::Tie;
  ComparisonRule rule = ComparisonRule::Identical;

  bool operator==(const ComparisonOutcome&) const = default;
};

/// Three-rule criterion over centroids of normalized sets with `levels`
/// labels: the bigger x_c wins; on equal x_c (within epsilon) at or above
/// levels/2 the higher y_c wins, below it the lower y_c wins; equal on both
/// coordinates is a tie.
ComparisonOutcome compare_centroids(const CentroidPoint& first, const CentroidPoint& second,
                                    int levels, double epsilon = 1e-9);

}  // namespace fuzzproc
