// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/labels.hpp"

#include <algorithm>
#include <stdexcept>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {

LabelSet::LabelSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() < 2) throw ValidationError("a label set needs at least 2 labels");
  for (const auto& n : names_) {
    if (n.empty()) throw ValidationError("label names must be non-empty");
    if (std::count(names_.begin(), names_.end(), n) != 1)
      throw ValidationError("duplicate label name '" + n + "'");
  }
}

const std::string& LabelSet::name(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("label index out of range");
  return names_[static_cast<std::size_t>(index)];
}

std::optional<int> LabelSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

}  // namespace fuzzproc
