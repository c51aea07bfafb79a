// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzproc {

/// Ordered set of linguistic performance labels. Index order is the degree of
/// success: index 0 is the lowest ("very low"), the last index the highest.
/// The default set is {a, b, c, d, e} with five levels.
class LabelSet {
 public:
  LabelSet() : LabelSet(default_names()) {}
  explicit LabelSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const;
  std::optional<int> index_of(std::string_view name) const;
  std::span<const std::string> names() const { return names_; }

  bool operator==(const LabelSet&) const = default;

 private:
  static std::vector<std::string> default_names() { return {"a", "b", "c", "d", "e"}; }

  std::vector<std::string> names_;
};

}  // namespace fuzzproc
