// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzproc/fuzzy_core.hpp"
#include "fuzzproc/rational.hpp"

namespace fuzzproc {

/// One label index per stage: the overall trajectory of an entity.
struct Profile {
  std::vector<int> labels;

  int stages() const { return static_cast<int>(labels.size()); }

  auto operator<=>(const Profile&) const = default;
};

enum class WeightRole { Membership, Probability, Possibility, PseudoFrequency };

std::string_view to_string(WeightRole role);

/// Dense weight table over the full levels^stages profile space, stored in
/// lexicographic profile order (label index 0 first). The role records which
/// normalization the weights carry.
class ProfileDistribution {
 public:
  ProfileDistribution() = default;
  ProfileDistribution(int stages, int levels, WeightRole role);

  int stages() const { return stages_; }
  int levels() const { return levels_; }
  WeightRole role() const { return role_; }
  std::size_t size() const { return weights_.size(); }

  const Rational& weight(std::size_t index) const { return weights_[index]; }
  const Rational& weight(const Profile& profile) const { return weights_[index_of(profile)]; }
  void set_weight(std::size_t index, Rational w) { weights_[index] = w; }
  std::span<const Rational> weights() const { return weights_; }

  std::size_t index_of(const Profile& profile) const;
  Profile profile_at(std::size_t index) const;

  Rational total() const;
  Rational max_weight() const;

  bool same_space(const ProfileDistribution& other) const {
    return stages_ == other.stages_ && levels_ == other.levels_;
  }

  bool operator==(const ProfileDistribution&) const = default;

 private:
  int stages_ = 0;
  int levels_ = 0;
  WeightRole role_ = WeightRole::Membership;
  std::vector<Rational> weights_;
};

/// All levels^stages profiles in lexicographic order; (a,a,...,a) first.
std::vector<Profile> enumerate_profiles(int stages, int levels);

/// True iff the labels never increase in success order along the stages.
bool is_well_ordered(const Profile& profile);

/// Product of the per-stage grades when the profile is well ordered, exactly
/// zero otherwise.
Rational profile_membership(const Profile& profile, std::span<const FuzzyStageSet> stage_sets);

/// Membership degree of every profile in the space (role Membership).
ProfileDistribution membership_distribution(std::span<const FuzzyStageSet> stage_sets);

/// Each weight divided by the total (role Probability; sums to exactly 1).
/// Throws DegenerateError when all weights are zero.
ProfileDistribution probabilities(const ProfileDistribution& distribution);

/// Each weight divided by the maximum (role Possibility; max is exactly 1).
/// Throws DegenerateError when all weights are zero.
ProfileDistribution possibilities(const ProfileDistribution& distribution);

/// Pointwise sum of the groups' weights (role PseudoFrequency). All inputs
/// must cover the same profile space.
ProfileDistribution pseudo_frequencies(std::span<const ProfileDistribution> distributions);

}  // namespace fuzzproc
