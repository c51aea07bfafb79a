// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <string>
#include <string_view>

#include "fuzzproc/analysis.hpp"

namespace fuzzproc {

enum class OutputFormat { Text, Json, Svg };

struct RenderOptions {
  /// Decimal places for text and svg output; json always carries the exact
  /// rationals plus shortest round-trip doubles.
  int precision = 3;
};

/// Aligned plain-text tables.
std::string render_text(const AnalysisReport& report, const RenderOptions& options = {});

/// Stable machine-readable schema, tagged "report-v1". Deterministic output;
/// parse_report inverts it exactly.
std::string render_json(const AnalysisReport& report);

/// One bar chart per stage plus a final centroid panel; stage count + 1
/// drawings as <g class="chart"> elements.
std::string render_svg(const AnalysisReport& report, const RenderOptions& options = {});

std::string render_report(const AnalysisReport& report, OutputFormat format,
                          const RenderOptions& options = {});

/// Inverse of render_json. Throws ValidationError for malformed documents or
/// unknown schema versions.
AnalysisReport parse_report(std::string_view json_text);

}  // namespace fuzzproc
