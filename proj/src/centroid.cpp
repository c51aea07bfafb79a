// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/centroid.hpp"

#include <cmath>
#include <stdexcept>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {

CentroidPoint centroid_general(std::span<const Rational> heights) {
  Rational mass;
  Rational first_moment;   // sum (2i-1) y_i
  Rational second_moment;  // sum y_i^2
  std::int64_t i = 0;
  for (const Rational& y : heights) {
    ++i;
    if (y.is_negative()) throw ValidationError("bar heights must be nonnegative");
    mass += y;
    first_moment += Rational(2 * i - 1) * y;
    second_moment += y * y;
  }
  if (mass.is_zero()) throw DegenerateError("all bar heights are zero; the centroid is undefined");
  return {first_moment / (Rational(2) * mass), second_moment / (Rational(2) * mass)};
}

CentroidPoint centroid(const NormalizedFuzzySet& set) {
  Rational x;
  Rational y;
  std::int64_t i = 0;
  for (const Rational& w : set.weights()) {
    ++i;
    x += Rational(2 * i - 1) * w;
    y += w * w;
  }
  return {x / Rational(2), y / Rational(2)};
}

NumericCentroid centroid_by_integration(std::span<const double> heights, int samples_per_bar) {
  if (samples_per_bar < 1) throw std::invalid_argument("samples_per_bar must be positive");
  double mass = 0.0;
  double moment_x = 0.0;
  double moment_y = 0.0;
  const int s = samples_per_bar;
  for (std::size_t bar = 0; bar < heights.size(); ++bar) {
    const double h = heights[bar];
    if (h < 0.0) throw ValidationError("bar heights must be nonnegative");
    if (h == 0.0) continue;
    const double dx = 1.0 / s;
    const double dy = h / s;
    const double cell = dx * dy;
    for (int ix = 0; ix < s; ++ix) {
      const double x = static_cast<double>(bar) + (ix + 0.5) * dx;
      for (int iy = 0; iy < s; ++iy) {
        const double y = (iy + 0.5) * dy;
        mass += cell;
        moment_x += x * cell;
        moment_y += y * cell;
      }
    }
  }
  if (mass <= 0.0) throw DegenerateError("all bar heights are zero; the centroid is undefined");
  return {moment_x / mass, moment_y / mass};
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::FirstBetter: return "first-better";
    case Verdict::SecondBetter: return "second-better";
    case Verdict::Tie: return "tie";
  }
  return "unknown";
}

std::string_view to_string(ComparisonRule rule) {
  switch (rule) {
    case ComparisonRule::BiggerX: return "bigger-xc";
    case ComparisonRule::EqualXHighBranch: return "equal-xc-high-branch";
    case ComparisonRule::EqualXLowBranch: return "equal-xc-low-branch";
    case ComparisonRule::Identical: return "identical";
  }
  return "unknown";
}

ComparisonOutcome compare_centroids(const CentroidPoint& first, const CentroidPoint& second,
                                    int levels, double epsilon) {
  const double x1 = first.x.value();
  const double x2 = second.x.value();
  if (std::abs(x1 - x2) > epsilon)
    return {x1 > x2 ? Verdict::FirstBetter : Verdict::SecondBetter, ComparisonRule::BiggerX};
  const double y1 = first.y.value();
  const double y2 = second.y.value();
  if (std::abs(y1 - y2) <= epsilon) return {Verdict::Tie, ComparisonRule::Identical};
  // shared x_c; the branch threshold is levels/2 (2.5 for five labels)
  if (x1 + x2 >= static_cast<double>(levels))
    return {y1 > y2 ? Verdict::FirstBetter : Verdict::SecondBetter,
            ComparisonRule::EqualXHighBranch};
  return {y1 < y2 ? Verdict::FirstBetter : Verdict::SecondBetter, ComparisonRule::EqualXLowBranch};
}

}  // namespace fuzzproc
