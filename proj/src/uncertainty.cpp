// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>


namespace fuzzproc {

OrderedPossibilityDistribution OrderedPossibilityDistribution::from_values(
    std::vector<double> values) {
  double previous = 1.0;
  bool first = true;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("possibility values must lie in [0, 1]");
    if (!first && v > previous)
      throw std::invalid_argument("possibility values must be non-increasing");
    previous = v;
    first = false;
  }
  return OrderedPossibilityDistribution(std::move(values));
}

OrderedPossibilityDistribution ordered_possibility(const ProfileDistribution& distribution) {
  if (distribution.role() != WeightRole::Possibility)
    throw std::invalid_argument("ordered_possibility expects a possibility distribution");
  std::vector<Rational> sorted(distribution.weights().begin(), distribution.weights().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Rational& a, const Rational& b) { return a > b; });
  std::vector<double> values;
  values.reserve(sorted.size());
  for (const Rational& r : sorted) values.push_back(r.value());
  return OrderedPossibilityDistribution::from_values(std::move(values));
}

double strife(const OrderedPossibilityDistribution& r) {
  const auto v = r.values();
  if (v.size() < 2) return 0.0;  // every jump sits at i = 1 and is excluded
  double acc = 0.0;
  double prefix = v[0];
  for (std::size_t i = 2; i <= v.size(); ++i) {  // 1-based rank, r_{m+1} = 0
    const double r_i = v[i - 1];
    const double r_next = i < v.size() ? v[i] : 0.0;
    prefix += r_i;
    const double jump = r_i - r_next;
    if (jump > 0.0) acc += jump * std::log2(static_cast<double>(i) / prefix);
  }
  return acc;
}

double nonspecificity(const OrderedPossibilityDistribution& r) {
  const auto v = r.values();
  if (v.size() < 2) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 2; i <= v.size(); ++i) {
    const double r_i = v[i - 1];
    const double r_next = i < v.size() ? v[i] : 0.0;
    const double jump = r_i - r_next;
    if (jump > 0.0) acc += jump * std::log2(static_cast<double>(i));
  }
  return acc;
}

double total_uncertainty(const OrderedPossibilityDistribution& r) {
  return strife(r) + nonspecificity(r);
}

double shannon_entropy(const ProfileDistribution& distribution, std::int64_t normalizer) {
  if (normalizer < 2) throw std::invalid_argument("entropy normalizer must be at least 2");
  double acc = 0.0;
  for (const Rational& w : distribution.weights()) {
    if (w.is_negative() || w > Rational(1))
      throw std::domain_error("entropy weights must lie in [0, 1], got " + w.str());
    const double m = w.value();
    if (m > 0.0) acc += m * std::log(m);
  }
  return -acc / std::log(static_cast<double>(normalizer));
}

}  // namespace fuzzproc
