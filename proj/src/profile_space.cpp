// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/profile_space.hpp"

#include <stdexcept>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {
namespace {

std::size_t space_size(int stages, int levels) {
  if (stages < 2) throw std::invalid_argument("profile space needs at least 2 stages");
  if (levels < 2) throw std::invalid_argument("profile space needs at least 2 levels");
  std::size_t size = 1;
  for (int i = 0; i < stages; ++i) {
    if (size > (std::size_t{1} << 24) / static_cast<std::size_t>(levels))
      throw std::invalid_argument("profile space too large");
    size *= static_cast<std::size_t>(levels);
  }
  return size;
}

}  // namespace

std::string_view to_string(WeightRole role) {
  switch (role) {
    case WeightRole::Membership: return "membership";
    case WeightRole::Probability: return "probability";
    case WeightRole::Possibility: return "possibility";
    case WeightRole::PseudoFrequency: return "pseudo-frequency";
  }
  return "unknown";
}

ProfileDistribution::ProfileDistribution(int stages, int levels, WeightRole role)
    : stages_(stages), levels_(levels), role_(role), weights_(space_size(stages, levels)) {}

std::size_t ProfileDistribution::index_of(const Profile& profile) const {
  if (profile.stages() != stages_) throw std::invalid_argument("profile has the wrong stage count");
  std::size_t index = 0;
  for (int label : profile.labels) {
    if (label < 0 || label >= levels_) throw std::out_of_range("label index out of range");
    index = index * static_cast<std::size_t>(levels_) + static_cast<std::size_t>(label);
  }
  return index;
}

Profile ProfileDistribution::profile_at(std::size_t index) const {
  Profile p;
  p.labels.assign(static_cast<std::size_t>(stages_), 0);
  for (int i = stages_ - 1; i >= 0; --i) {
    p.labels[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(levels_));
    index /= static_cast<std::size_t>(levels_);
  }
  return p;
}

Rational ProfileDistribution::total() const {
  Rational sum;
  for (const Rational& w : weights_) sum += w;
  return sum;
}

Rational ProfileDistribution::max_weight() const {
  Rational best;
  for (const Rational& w : weights_)
    if (w > best) best = w;
  return best;
}

std::vector<Profile> enumerate_profiles(int stages, int levels) {
  const std::size_t count = space_size(stages, levels);
  std::vector<Profile> out;
  out.reserve(count);
  Profile current;
  current.labels.assign(static_cast<std::size_t>(stages), 0);
  out.push_back(current);
  for (std::size_t n = 1; n < count; ++n) {
    // odometer increment, least significant stage last
    for (int i = stages - 1; i >= 0; --i) {
      auto& digit = current.labels[static_cast<std::size_t>(i)];
      if (++digit < levels) break;
      digit = 0;
    }
    out.push_back(current);
  }
  return out;
}

bool is_well_ordered(const Profile& profile) {
  for (std::size_t i = 1; i < profile.labels.size(); ++i)
    if (profile.labels[i] > profile.labels[i - 1]) return false;
  return true;
}

Rational profile_membership(const Profile& profile, std::span<const FuzzyStageSet> stage_sets) {
  if (profile.labels.size() != stage_sets.size())
    throw std::invalid_argument("profile length does not match the number of stage sets");
  if (!is_well_ordered(profile)) return Rational(0);
  Rational product(1);
  for (std::size_t i = 0; i < stage_sets.size(); ++i)
    product *= stage_sets[i].grade(profile.labels[i]).value();
  return product;
}

ProfileDistribution membership_distribution(std::span<const FuzzyStageSet> stage_sets) {
  if (stage_sets.size() < 2) throw std::invalid_argument("at least 2 stage sets required");
  const int levels = stage_sets.front().levels();
  for (const FuzzyStageSet& set : stage_sets)
    if (set.levels() != levels)
      throw ValidationError("stage sets disagree on the number of labels");
  ProfileDistribution d(static_cast<int>(stage_sets.size()), levels, WeightRole::Membership);
  for (std::size_t i = 0; i < d.size(); ++i)
    d.set_weight(i, profile_membership(d.profile_at(i), stage_sets));
  return d;
}

ProfileDistribution probabilities(const ProfileDistribution& distribution) {
  const Rational total = distribution.total();
  if (total.is_zero())
    throw DegenerateError("all profile weights are zero; probabilities are undefined");
  ProfileDistribution out(distribution.stages(), distribution.levels(), WeightRole::Probability);
  for (std::size_t i = 0; i < out.size(); ++i) out.set_weight(i, distribution.weight(i) / total);
  return out;
}

ProfileDistribution possibilities(const ProfileDistribution& distribution) {
  const Rational max = distribution.max_weight();
  if (max.is_zero())
    throw DegenerateError("all profile weights are zero; possibilities are undefined");
  ProfileDistribution out(distribution.stages(), distribution.levels(), WeightRole::Possibility);
  for (std::size_t i = 0; i < out.size(); ++i) out.set_weight(i, distribution.weight(i) / max);
  return out;
}

ProfileDistribution pseudo_frequencies(std::span<const ProfileDistribution> distributions) {
  if (distributions.size() < 2)
    throw std::invalid_argument("pseudo-frequencies need at least 2 distributions");
  const ProfileDistribution& first = distributions.front();
  for (const ProfileDistribution& d : distributions)
    if (!d.same_space(first))
      throw ValidationError("distributions cover different profile spaces");
  ProfileDistribution out(first.stages(), first.levels(), WeightRole::PseudoFrequency);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Rational sum;
    for (const ProfileDistribution& d : distributions) sum += d.weight(i);
    out.set_weight(i, sum);
  }
  return out;
}

}  // namespace fuzzproc
