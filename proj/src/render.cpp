// Apache License, Version 2.0, refer to LICENSE.txt
#include "fuzzproc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fuzzproc/errors.hpp"

namespace fuzzproc {
namespace {

using ordered_json = nlohmann::ordered_json;
using nlohmann::json;

std::string fixed(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  return buffer;
}

std::string fixed(const Rational& value, int precision) { return fixed(value.value(), precision); }

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string profile_text(const Profile& profile, const LabelSet& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.labels.size(); ++i) {
    if (i) out += ", ";
    out += labels.name(profile.labels[i]);
  }
  out += ")";
  return out;
}

// ---------------------------------------------------------------- text ----

void text_group(std::ostringstream& out, const GroupAnalysis& group, const LabelSet& labels,
                int precision) {
  const std::size_t num_w = std::max<std::size_t>(8, static_cast<std::size_t>(precision) + 4);
  std::size_t stage_w = 5;
  for (const StageAnalysis& s : group.stages) stage_w = std::max(stage_w, s.name.size());

  out << "group " << group.name << " (n=" << group.size << ")\n\n";

  out << "  membership grades\n";
  out << "    " << pad_right("stage", stage_w);
  for (const auto& name : labels.names()) out << pad_left(name, num_w);
  out << "\n";
  for (const StageAnalysis& s : group.stages) {
    out << "    " << pad_right(s.name, stage_w);
    for (const Grade& g : s.fuzzy_set.grades()) out << pad_left(fixed(g.value(), precision), num_w);
    out << "\n";
  }

  out << "\n  normalized weights and centroid\n";
  out << "    " << pad_right("stage", stage_w);
  for (const auto& name : labels.names()) out << pad_left(name, num_w);
  out << pad_left("xc", num_w) << pad_left("yc", num_w) << "\n";
  for (const StageAnalysis& s : group.stages) {
    out << "    " << pad_right(s.name, stage_w);
    for (const Rational& w : s.normalized.weights()) out << pad_left(fixed(w, precision), num_w);
    out << pad_left(fixed(s.centroid.x, precision), num_w)
        << pad_left(fixed(s.centroid.y, precision), num_w) << "\n";
  }

  std::size_t profile_w = 7;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < group.membership.size(); ++i) {
    if (group.membership.weight(i).is_zero()) continue;
    ++nonzero;
    profile_w = std::max(profile_w, profile_text(group.membership.profile_at(i), labels).size());
  }
  out << "\n  profiles with nonzero membership (" << nonzero << " of " << group.membership.size()
      << ")\n";
  out << "    " << pad_right("profile", profile_w) << pad_left("membership", num_w + 4)
      << pad_left("probability", num_w + 4) << pad_left("possibility", num_w + 4) << "\n";
  for (std::size_t i = 0; i < group.membership.size(); ++i) {
    if (group.membership.weight(i).is_zero()) continue;
    out << "    " << pad_right(profile_text(group.membership.profile_at(i), labels), profile_w)
        << pad_left(fixed(group.membership.weight(i), precision), num_w + 4)
        << pad_left(fixed(group.probability.weight(i), precision), num_w + 4)
        << pad_left(fixed(group.possibility.weight(i), precision), num_w + 4) << "\n";
  }

  out << "\n  uncertainty\n";
  out << "    strife          " << fixed(group.uncertainty.strife, precision) << "\n";
  out << "    nonspecificity  " << fixed(group.uncertainty.nonspecificity, precision) << "\n";
  out << "    total           " << fixed(group.uncertainty.total, precision) << "\n";
  out << "    shannon         " << fixed(group.uncertainty.shannon, precision) << "\n";
}

void text_combined(std::ostringstream& out, const CombinedView& view, const LabelSet& labels,
                   int precision) {
  const std::size_t num_w = std::max<std::size_t>(8, static_cast<std::size_t>(precision) + 4);
  std::size_t profile_w = 7;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < view.pseudo_frequency.size(); ++i) {
    if (view.pseudo_frequency.weight(i).is_zero()) continue;
    ++nonzero;
    profile_w =
        std::max(profile_w, profile_text(view.pseudo_frequency.profile_at(i), labels).size());
  }
  out << "combined groups\n\n";
  out << "  profiles with nonzero pseudo-frequency (" << nonzero << " of "
      << view.pseudo_frequency.size() << ")\n";
  out << "    " << pad_right("profile", profile_w) << pad_left("f", num_w + 4)
      << pad_left("p", num_w + 4) << pad_left("r", num_w + 4) << "\n";
  for (std::size_t i = 0; i < view.pseudo_frequency.size(); ++i) {
    if (view.pseudo_frequency.weight(i).is_zero()) continue;
    out << "    " << pad_right(profile_text(view.pseudo_frequency.profile_at(i), labels), profile_w)
        << pad_left(fixed(view.pseudo_frequency.weight(i), precision), num_w + 4)
        << pad_left(fixed(view.probability.weight(i), precision), num_w + 4)
        << pad_left(fixed(view.possibility.weight(i), precision), num_w + 4) << "\n";
  }
  if (view.uncertainty) {
    out << "\n  possibilistic uncertainty\n";
    out << "    strife          " << fixed(view.uncertainty->strife, precision) << "\n";
    out << "    nonspecificity  " << fixed(view.uncertainty->nonspecificity, precision) << "\n";
    out << "    total           " << fixed(view.uncertainty->total, precision) << "\n";
  }
}

}  // namespace

std::string render_text(const AnalysisReport& report, const RenderOptions& options) {
  std::ostringstream out;
  out << "report-v1\n";
  out << "labels:";
  for (const auto& name : report.labels.names()) out << " " << name;
  out << "\nstages:";
  for (std::size_t i = 0; i < report.stage_names.size(); ++i)
    out << (i ? " | " : " ") << report.stage_names[i];
  out << "\nshannon normalizer: " << report.shannon_normalizer << "\n\n";

  for (const GroupAnalysis& group : report.groups) {
    text_group(out, group, report.labels, options.precision);
    out << "\n";
  }
  if (report.combined) {
    text_combined(out, *report.combined, report.labels, options.precision);
    out << "\n";
  }
  if (!report.comparisons.empty()) {
    std::size_t stage_w = 5;
    std::size_t group_w = 5;
    for (const StageComparison& c : report.comparisons) {
      stage_w = std::max(stage_w, report.stage_names[static_cast<std::size_t>(c.stage_index)].size());
      group_w = std::max({group_w, c.first_group.size(), c.second_group.size()});
    }
    out << "stage comparisons\n";
    out << "    " << pad_right("stage", stage_w) << "  " << pad_right("first", group_w) << "  "
        << pad_right("second", group_w) << "  " << pad_right("verdict", 13) << "  rule\n";
    for (const StageComparison& c : report.comparisons) {
      out << "    " << pad_right(report.stage_names[static_cast<std::size_t>(c.stage_index)], stage_w)
          << "  " << pad_right(c.first_group, group_w) << "  "
          << pad_right(c.second_group, group_w) << "  "
          << pad_right(std::string(to_string(c.outcome.verdict)), 13) << "  "
          << to_string(c.outcome.rule) << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- json ----

namespace {

ordered_json distribution_rows(const GroupAnalysis& group, const LabelSet& labels) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < group.membership.size(); ++i) {
    if (group.membership.weight(i).is_zero()) continue;
    const Profile p = group.membership.profile_at(i);
    ordered_json row;
    ordered_json names = ordered_json::array();
    for (int label : p.labels) names.push_back(labels.name(label));
    row["labels"] = std::move(names);
    row["membership"] = group.membership.weight(i).str();
    row["probability"] = group.probability.weight(i).str();
    row["possibility"] = group.possibility.weight(i).str();
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json combined_rows(const CombinedView& view, const LabelSet& labels) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < view.pseudo_frequency.size(); ++i) {
    if (view.pseudo_frequency.weight(i).is_zero()) continue;
    const Profile p = view.pseudo_frequency.profile_at(i);
    ordered_json row;
    ordered_json names = ordered_json::array();
    for (int label : p.labels) names.push_back(labels.name(label));
    row["labels"] = std::move(names);
    row["pseudoFrequency"] = view.pseudo_frequency.weight(i).str();
    row["probability"] = view.probability.weight(i).str();
    row["possibility"] = view.possibility.weight(i).str();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string render_json(const AnalysisReport& report) {
  ordered_json doc;
  doc["schema"] = "report-v1";
  doc["labels"] = report.labels.names();
  doc["stageNames"] = report.stage_names;
  doc["shannonNormalizer"] = report.shannon_normalizer;
  doc["epsilon"] = report.epsilon;

  ordered_json groups = ordered_json::array();
  for (const GroupAnalysis& group : report.groups) {
    ordered_json g;
    g["name"] = group.name;
    g["size"] = group.size;
    ordered_json stages = ordered_json::array();
    for (const StageAnalysis& stage : group.stages) {
      ordered_json s;
      s["name"] = stage.name;
      s["counts"] = stage.counts.counts;
      ordered_json grades = ordered_json::array();
      for (const Grade& grade : stage.fuzzy_set.grades()) grades.push_back(grade.value().str());
      s["grades"] = std::move(grades);
      ordered_json weights = ordered_json::array();
      for (const Rational& w : stage.normalized.weights()) weights.push_back(w.str());
      s["normalized"] = std::move(weights);
      s["centroid"] = {{"x", stage.centroid.x.str()}, {"y", stage.centroid.y.str()}};
      stages.push_back(std::move(s));
    }
    g["stages"] = std::move(stages);
    g["profiles"] = distribution_rows(group, report.labels);
    g["uncertainty"] = {{"strife", group.uncertainty.strife},
                        {"nonspecificity", group.uncertainty.nonspecificity},
                        {"total", group.uncertainty.total},
                        {"shannon", group.uncertainty.shannon}};
    groups.push_back(std::move(g));
  }
  doc["groups"] = std::move(groups);

  if (report.combined) {
    ordered_json c;
    c["profiles"] = combined_rows(*report.combined, report.labels);
    if (report.combined->uncertainty) {
      c["uncertainty"] = {{"strife", report.combined->uncertainty->strife},
                          {"nonspecificity", report.combined->uncertainty->nonspecificity},
                          {"total", report.combined->uncertainty->total}};
    }
    doc["combined"] = std::move(c);
  }

  ordered_json comparisons = ordered_json::array();
  for (const StageComparison& c : report.comparisons) {
    ordered_json row;
    row["stageIndex"] = c.stage_index;
    row["stage"] = report.stage_names[static_cast<std::size_t>(c.stage_index)];
    row["first"] = c.first_group;
    row["second"] = c.second_group;
    row["verdict"] = std::string(to_string(c.outcome.verdict));
    row["rule"] = std::string(to_string(c.outcome.rule));
    comparisons.push_back(std::move(row));
  }
  doc["comparisons"] = std::move(comparisons);

  return doc.dump(2) + "\n";
}

// --------------------------------------------------------------- parse ----

namespace {

Rational rational_field(const json& value, const char* what) {
  if (!value.is_string()) throw ValidationError(std::string(what) + " must be a rational string");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

Grade grade_field(const json& value) {
  const Rational r = rational_field(value, "grade");
  const Rational quarters = r * Rational(4);
  if (quarters.den() != 1 || quarters.num() < 0 || quarters.num() > 4)
    throw ValidationError("grade " + r.str() + " is not a quarter step in [0, 1]");
  return Grade::from_quarters(static_cast<int>(quarters.num()));
}

Profile profile_field(const json& names, const LabelSet& labels) {
  Profile p;
  for (const json& name : names) {
    auto index = labels.index_of(name.get<std::string>());
    if (!index) throw ValidationError("unknown label '" + name.get<std::string>() + "' in report");
    p.labels.push_back(*index);
  }
  return p;
}

Verdict verdict_from(const std::string& text) {
  if (text == "first-better") return Verdict::FirstBetter;
  if (text == "second-better") return Verdict::SecondBetter;
  if (text == "tie") return Verdict::Tie;
  throw ValidationError("unknown verdict '" + text + "'");
}

ComparisonRule rule_from(const std::string& text) {
  if (text == "bigger-xc") return ComparisonRule::BiggerX;
  if (text == "equal-xc-high-branch") return ComparisonRule::EqualXHighBranch;
  if (text == "equal-xc-low-branch") return ComparisonRule::EqualXLowBranch;
  if (text == "identical") return ComparisonRule::Identical;
  throw ValidationError("unknown comparison rule '" + text + "'");
}

}  // namespace

AnalysisReport parse_report(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  if (doc.value("schema", "") != "report-v1")
    throw ValidationError("unsupported report schema '" + doc.value("schema", "") + "'");

  AnalysisReport report;
  report.labels = LabelSet(doc.at("labels").get<std::vector<std::string>>());
  report.stage_names = doc.at("stageNames").get<std::vector<std::string>>();
  report.shannon_normalizer = doc.at("shannonNormalizer").get<std::int64_t>();
  report.epsilon = doc.at("epsilon").get<double>();

  const int stages = static_cast<int>(report.stage_names.size());
  const int levels = report.labels.size();

  for (const json& g : doc.at("groups")) {
    GroupAnalysis group;
    group.name = g.at("name").get<std::string>();
    group.size = g.at("size").get<std::int64_t>();
    for (const json& s : g.at("stages")) {
      StageCounts counts;
      counts.group_size = group.size;
      counts.counts = s.at("counts").get<std::vector<std::int64_t>>();
      std::vector<Grade> grades;
      for (const json& value : s.at("grades")) grades.push_back(grade_field(value));
      std::vector<Rational> weights;
      for (const json& value : s.at("normalized"))
        weights.push_back(rational_field(value, "normalized weight"));
      const json& c = s.at("centroid");
      group.stages.push_back(
          StageAnalysis{s.at("name").get<std::string>(), std::move(counts),
                        FuzzyStageSet(s.at("name").get<std::string>(), std::move(grades)),
                        NormalizedFuzzySet(std::move(weights)),
                        CentroidPoint{rational_field(c.at("x"), "centroid x"),
                                      rational_field(c.at("y"), "centroid y")}});
    }
    group.membership = ProfileDistribution(stages, levels, WeightRole::Membership);
    group.probability = ProfileDistribution(stages, levels, WeightRole::Probability);
    group.possibility = ProfileDistribution(stages, levels, WeightRole::Possibility);
    for (const json& row : g.at("profiles")) {
      const Profile p = profile_field(row.at("labels"), report.labels);
      const std::size_t index = group.membership.index_of(p);
      group.membership.set_weight(index, rational_field(row.at("membership"), "membership"));
      group.probability.set_weight(index, rational_field(row.at("probability"), "probability"));
      group.possibility.set_weight(index, rational_field(row.at("possibility"), "possibility"));
    }
    const json& u = g.at("uncertainty");
    group.uncertainty = UncertaintyReport{u.at("strife").get<double>(),
                                          u.at("nonspecificity").get<double>(),
                                          u.at("total").get<double>(), u.at("shannon").get<double>()};
    report.groups.push_back(std::move(group));
  }

  if (doc.contains("combined")) {
    const json& c = doc["combined"];
    CombinedView view;
    view.pseudo_frequency = ProfileDistribution(stages, levels, WeightRole::PseudoFrequency);
    view.probability = ProfileDistribution(stages, levels, WeightRole::Probability);
    view.possibility = ProfileDistribution(stages, levels, WeightRole::Possibility);
    for (const json& row : c.at("profiles")) {
      const Profile p = profile_field(row.at("labels"), report.labels);
      const std::size_t index = view.pseudo_frequency.index_of(p);
      view.pseudo_frequency.set_weight(index,
                                       rational_field(row.at("pseudoFrequency"), "pseudo-frequency"));
      view.probability.set_weight(index, rational_field(row.at("probability"), "probability"));
      view.possibility.set_weight(index, rational_field(row.at("possibility"), "possibility"));
    }
    if (c.contains("uncertainty")) {
      const json& u = c["uncertainty"];
      view.uncertainty = PossibilisticUncertainty{u.at("strife").get<double>(),
                                                  u.at("nonspecificity").get<double>(),
                                                  u.at("total").get<double>()};
    }
    report.combined = std::move(view);
  }

  for (const json& row : doc.at("comparisons")) {
    StageComparison c;
    c.stage_index = row.at("stageIndex").get<int>();
    if (c.stage_index < 0 || c.stage_index >= stages)
      throw ValidationError("comparison stage index out of range");
    c.first_group = row.at("first").get<std::string>();
    c.second_group = row.at("second").get<std::string>();
    c.outcome.verdict = verdict_from(row.at("verdict").get<std::string>());
    c.outcome.rule = rule_from(row.at("rule").get<std::string>());
    report.comparisons.push_back(std::move(c));
  }

  return report;
}

// ----------------------------------------------------------------- svg ----

namespace {

const char* palette(std::size_t index) {
  static const char* colors[] = {"#4e79a7", "#f28e2b", "#59a14b", "#e15759",
                                 "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};
  return colors[index % (sizeof(colors) / sizeof(colors[0]))];
}

struct SvgLayout {
  static constexpr int width = 560;
  static constexpr int panel_height = 200;
  static constexpr int margin_left = 50;
  static constexpr int margin_top = 34;
  static constexpr int plot_height = 130;
};

void svg_bar_panel(std::ostringstream& out, int panel, const std::string& title,
                   std::span<const std::string> series_names,
                   const std::vector<std::vector<double>>& series, const LabelSet& labels,
                   double max_value) {
  const int plot_width = SvgLayout::width - SvgLayout::margin_left - 20;
  const double slot = static_cast<double>(plot_width) / labels.size();
  out << "  <g class=\"chart\" transform=\"translate(0," << panel * SvgLayout::panel_height
      << ")\">\n";
  out << "    <text x=\"" << SvgLayout::margin_left << "\" y=\"20\" font-size=\"13\" "
      << "font-family=\"sans-serif\">" << title << "</text>\n";
  const int base = SvgLayout::margin_top + SvgLayout::plot_height;
  out << "    <line x1=\"" << SvgLayout::margin_left << "\" y1=\"" << base << "\" x2=\""
      << SvgLayout::margin_left + plot_width << "\" y2=\"" << base
      << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  for (int l = 0; l < labels.size(); ++l) {
    const double x0 = SvgLayout::margin_left + l * slot;
    const double bar_w = slot * 0.8 / static_cast<double>(series.size());
    for (std::size_t s = 0; s < series.size(); ++s) {
      const double v = max_value > 0.0 ? series[s][static_cast<std::size_t>(l)] / max_value : 0.0;
      const double h = v * SvgLayout::plot_height;
      out << "    <rect x=\"" << fixed(x0 + slot * 0.1 + bar_w * static_cast<double>(s), 2)
          << "\" y=\"" << fixed(base - h, 2) << "\" width=\"" << fixed(bar_w, 2) << "\" height=\""
          << fixed(h, 2) << "\" fill=\"" << palette(s) << "\"/>\n";
    }
    out << "    <text x=\"" << fixed(x0 + slot / 2, 2) << "\" y=\"" << base + 16
        << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">"
        << labels.name(l) << "</text>\n";
  }
  for (std::size_t s = 0; s < series_names.size(); ++s) {
    const int y = SvgLayout::margin_top + static_cast<int>(s) * 16;
    out << "    <rect x=\"" << SvgLayout::width - 130 << "\" y=\"" << y - 9
        << "\" width=\"10\" height=\"10\" fill=\"" << palette(s) << "\"/>\n";
    out << "    <text x=\"" << SvgLayout::width - 116 << "\" y=\"" << y
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << series_names[s] << "</text>\n";
  }
  out << "  </g>\n";
}

}  // namespace

std::string render_svg(const AnalysisReport& report, const RenderOptions& options) {
  const int stage_count = static_cast<int>(report.stage_names.size());
  const int panels = stage_count + 1;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << SvgLayout::width << "\" height=\""
      << panels * SvgLayout::panel_height << "\" viewBox=\"0 0 " << SvgLayout::width << " "
      << panels * SvgLayout::panel_height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<std::string> series_names;
  for (const GroupAnalysis& g : report.groups) series_names.push_back(g.name);

  if (!report.groups.empty()) {
    for (int s = 0; s < stage_count; ++s) {
      std::vector<std::vector<double>> series;
      for (const GroupAnalysis& g : report.groups) {
        std::vector<double> heights;
        for (const Grade& grade : g.stages[static_cast<std::size_t>(s)].fuzzy_set.grades())
          heights.push_back(grade.value().value());
        series.push_back(std::move(heights));
      }
      svg_bar_panel(out, s, "stage: " + report.stage_names[static_cast<std::size_t>(s)],
                    series_names, series, report.labels, 1.0);
    }
  } else if (report.combined) {
    // combined-only report: show the pseudo-frequency marginal of each stage
    const ProfileDistribution& f = report.combined->pseudo_frequency;
    double max_marginal = 0.0;
    std::vector<std::vector<double>> marginals(static_cast<std::size_t>(stage_count),
                                               std::vector<double>(report.labels.size(), 0.0));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Profile p = f.profile_at(i);
      const double w = f.weight(i).value();
      for (int s = 0; s < stage_count; ++s) {
        auto& cell = marginals[static_cast<std::size_t>(s)]
                              [static_cast<std::size_t>(p.labels[static_cast<std::size_t>(s)])];
        cell += w;
        max_marginal = std::max(max_marginal, cell);
      }
    }
    std::vector<std::string> combined_name{"combined"};
    for (int s = 0; s < stage_count; ++s) {
      std::vector<std::vector<double>> series{marginals[static_cast<std::size_t>(s)]};
      svg_bar_panel(out, s,
                    "stage: " + report.stage_names[static_cast<std::size_t>(s)] +
                        " (pseudo-frequency marginal)",
                    combined_name, series, report.labels, max_marginal);
    }
  }

  // final panel: centroid scatter with the feasible bounds and the
  // F_w / F_m / F_i landmarks
  const int L = report.labels.size();
  const double x_min = 0.5, x_max = (2.0 * L - 1.0) / 2.0;
  const double y_min = 1.0 / (2.0 * L), y_max = 0.5;
  const int plot_width = SvgLayout::width - SvgLayout::margin_left - 20;
  const int base = SvgLayout::margin_top + SvgLayout::plot_height;
  auto sx = [&](double x) {
    return SvgLayout::margin_left + (x - x_min) / (x_max - x_min) * plot_width;
  };
  auto sy = [&](double y) {
    return base - (y - y_min) / (y_max - y_min) * SvgLayout::plot_height;
  };
  out << "  <g class=\"chart\" transform=\"translate(0," << stage_count * SvgLayout::panel_height
      << ")\">\n";
  out << "    <text x=\"" << SvgLayout::margin_left << "\" y=\"20\" font-size=\"13\" "
      << "font-family=\"sans-serif\">centroids</text>\n";
  out << "    <rect x=\"" << fixed(sx(x_min), 2) << "\" y=\"" << fixed(sy(y_max), 2)
      << "\" width=\"" << fixed(sx(x_max) - sx(x_min), 2) << "\" height=\""
      << fixed(sy(y_min) - sy(y_max), 2)
      << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  // worst / minimum / ideal triangle, shown as an illustration
  out << "    <polygon points=\"" << fixed(sx(x_min), 2) << "," << fixed(sy(y_max), 2) << " "
      << fixed(sx((x_min + x_max) / 2.0), 2) << "," << fixed(sy(y_min), 2) << " "
      << fixed(sx(x_max), 2) << "," << fixed(sy(y_max), 2)
      << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  out << "    <text x=\"" << fixed(sx(x_min) + 4, 2) << "\" y=\"" << fixed(sy(y_max) - 4, 2)
      << "\" font-size=\"10\" font-family=\"sans-serif\">Fw</text>\n";
  out << "    <text x=\"" << fixed(sx((x_min + x_max) / 2.0) + 4, 2) << "\" y=\""
      << fixed(sy(y_min) - 4, 2) << "\" font-size=\"10\" font-family=\"sans-serif\">Fm</text>\n";
  out << "    <text x=\"" << fixed(sx(x_max) - 16, 2) << "\" y=\"" << fixed(sy(y_max) - 4, 2)
      << "\" font-size=\"10\" font-family=\"sans-serif\">Fi</text>\n";
  if (!report.groups.empty()) {
    for (std::size_t g = 0; g < report.groups.size(); ++g) {
      for (std::size_t s = 0; s < report.groups[g].stages.size(); ++s) {
        const CentroidPoint& c = report.groups[g].stages[s].centroid;
        out << "    <circle cx=\"" << fixed(sx(c.x.value()), 2) << "\" cy=\""
            << fixed(sy(c.y.value()), 2) << "\" r=\"4\" fill=\"" << palette(g) << "\"/>\n";
        out << "    <text x=\"" << fixed(sx(c.x.value()) + 6, 2) << "\" y=\""
            << fixed(sy(c.y.value()) + 3, 2)
            << "\" font-size=\"10\" font-family=\"sans-serif\">" << report.groups[g].name << ":S"
            << s + 1 << " (" << fixed(c.x, options.precision) << ", "
            << fixed(c.y, options.precision) << ")</text>\n";
      }
    }
  } else if (report.combined) {
    // no centroids in a combined-only report; plot the nonzero ordered
    // possibilities along the x axis instead
    std::vector<double> values;
    for (const Rational& w : report.combined->possibility.weights())
      if (!w.is_zero()) values.push_back(w.value());
    std::sort(values.begin(), values.end(), std::greater<>());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double x = x_min + (x_max - x_min) * (static_cast<double>(i) /
                                                  std::max<std::size_t>(1, values.size() - 1));
      const double y = y_min + (y_max - y_min) * values[i];
      out << "    <circle cx=\"" << fixed(sx(x), 2) << "\" cy=\"" << fixed(sy(y), 2)
          << "\" r=\"3\" fill=\"" << palette(0) << "\"/>\n";
    }
    out << "    <text x=\"" << SvgLayout::margin_left << "\" y=\"" << base + 16
        << "\" font-size=\"10\" font-family=\"sans-serif\">ordered possibility values "
        << "(nonzero ranks)</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_report(const AnalysisReport& report, OutputFormat format,
                          const RenderOptions& options) {
  switch (format) {
    case OutputFormat::Text: return render_text(report, options);
    case OutputFormat::Json: return render_json(report);
    case OutputFormat::Svg: return render_svg(report, options);
  }
  throw std::invalid_argument("unknown output format");
}

}  // namespace fuzzproc
