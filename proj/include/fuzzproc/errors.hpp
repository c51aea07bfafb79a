// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <stdexcept>
#include <string>

namespace fuzzproc {

/// Raised when input data breaks a structural contract (counts that do not
/// partition the group, unknown labels, mismatched profile spaces, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

/// Raised when an operation is undefined on the given data, e.g. normalizing
/// an all-zero fuzzy set or rescaling an all-zero distribution (0/0).
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace fuzzproc
