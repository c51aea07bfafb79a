// Apache License, Version 2.0, refer to LICENSE.txt
//
// Shared helpers for the test suites: fixture loading, independent oracles
// (kept deliberately separate from the library's code paths) and small random
// generators.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzproc/fuzzy_core.hpp"
#include "fuzzproc/rational.hpp"

// absolute-tolerance check; doctest's Approx only offers a relative epsilon
#define CHECK_NEAR(actual, expected, tolerance) \
  CHECK(std::abs((actual) - (expected)) <= (tolerance))

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(FUZZPROC_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Literal transcription of the five interval tests, highest band first. Used
// to cross-check the library's quantizer, so it must stay a direct copy of
// the reference definition rather than share its code.
inline fuzzproc::Rational quantizer_oracle(std::int64_t count, std::int64_t n) {
  using fuzzproc::Rational;
  if (4 * n < 5 * count && count <= n) return Rational(1);
  if (3 * n < 5 * count && 5 * count <= 4 * n) return Rational(3, 4);
  if (2 * n < 5 * count && 5 * count <= 3 * n) return Rational(1, 2);
  if (1 * n < 5 * count && 5 * count <= 2 * n) return Rational(1, 4);
  return Rational(0);
}

// Brute-force three-stage membership table: plain nested loops, its own
// well-ordering test, no profile indexing machinery.
struct BruteForceTable {
  // value[i][j][k] is the membership of profile (i, j, k)
  std::vector<std::vector<std::vector<fuzzproc::Rational>>> value;
  fuzzproc::Rational total;
  fuzzproc::Rational max;
};

inline BruteForceTable brute_force_memberships(const std::vector<fuzzproc::Rational>& s1,
                                               const std::vector<fuzzproc::Rational>& s2,
                                               const std::vector<fuzzproc::Rational>& s3) {
  using fuzzproc::Rational;
  const std::size_t levels = s1.size();
  BruteForceTable table;
  table.value.assign(levels, std::vector<std::vector<Rational>>(
                                 levels, std::vector<Rational>(levels)));
  for (std::size_t i = 0; i < levels; ++i)
    for (std::size_t j = 0; j < levels; ++j)
      for (std::size_t k = 0; k < levels; ++k) {
        const bool well_ordered = i >= j && j >= k;
        Rational m = well_ordered ? s1[i] * s2[j] * s3[k] : Rational(0);
        table.value[i][j][k] = m;
        table.total += m;
        if (m > table.max) table.max = m;
      }
  return table;
}

// Second route for the scalar measures: base-10 logarithms with the 1/log10(2)
// prefactor, reversed traversal, Kahan-compensated accumulation. Partial sums
// are recomputed per term instead of kept as a running prefix.
inline double strife_oracle(std::vector<double> values) {
  values.push_back(0.0);
  const std::size_t m = values.size() - 1;
  double acc = 0.0, compensation = 0.0;
  for (std::size_t i = m; i >= 2; --i) {
    const double jump = values[i - 1] - values[i];
    if (jump <= 0.0) continue;
    double partial = 0.0;
    for (std::size_t j = i; j >= 1; --j) partial += values[j - 1];
    const double term = jump * std::log10(static_cast<double>(i) / partial);
    const double y = term - compensation;
    const double t = acc + y;
    compensation = (t - acc) - y;
    acc = t;
  }
  return acc / std::log10(2.0);
}

inline double nonspecificity_oracle(std::vector<double> values) {
  values.push_back(0.0);
  const std::size_t m = values.size() - 1;
  double acc = 0.0, compensation = 0.0;
  for (std::size_t i = m; i >= 2; --i) {
    const double jump = values[i - 1] - values[i];
    if (jump <= 0.0) continue;
    const double term = jump * std::log10(static_cast<double>(i));
    const double y = term - compensation;
    const double t = acc + y;
    compensation = (t - acc) - y;
    acc = t;
  }
  return acc / std::log10(2.0);
}

inline double shannon_oracle(const std::vector<double>& weights, double normalizer) {
  double acc = 0.0, compensation = 0.0;
  for (std::size_t i = weights.size(); i >= 1; --i) {
    const double w = weights[i - 1];
    if (w <= 0.0) continue;
    const double term = w * std::log(w);
    const double y = term - compensation;
    const double t = acc + y;
    compensation = (t - acc) - y;
    acc = t;
  }
  return -acc / std::log(normalizer);
}

// Random composition of n into `parts` nonnegative integers (stars and bars
// via sorted cut points), always a valid partition of the group.
inline std::vector<std::int64_t> random_partition(std::mt19937& rng, std::int64_t n, int parts) {
  std::vector<std::int64_t> cuts{0, n};
  std::uniform_int_distribution<std::int64_t> dist(0, n);
  for (int i = 1; i < parts; ++i) cuts.push_back(dist(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> out;
  for (int i = 0; i < parts; ++i) out.push_back(cuts[static_cast<std::size_t>(i) + 1] -
                                                cuts[static_cast<std::size_t>(i)]);
  return out;
}

inline fuzzproc::StageCounts random_counts(std::mt19937& rng, std::int64_t n, int levels) {
  return fuzzproc::StageCounts{n, random_partition(rng, n, levels)};
}

}  // namespace testsupport
