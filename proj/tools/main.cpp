// Apache License, Version 2.0, refer to LICENSE.txt
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzproc/analysis.hpp"
#include "fuzzproc/dataset.hpp"
#include "fuzzproc/errors.hpp"
#include "fuzzproc/render.hpp"

namespace {

using namespace fuzzproc;

struct CommonOptions {
  std::string format = "text";
  int precision = 3;
  std::int64_t normalizer = 0;
  std::string stages;
  double epsilon = 1e-9;
  std::string labels;
  std::string input = "auto";
  std::string output;
  bool with_measures = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "svg"}))
      ->capture_default_str();
  cmd->add_option("--precision", opts.precision, "Decimal places in text/svg output")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
  cmd->add_option("--normalizer", opts.normalizer,
                  "Shannon entropy normalizer (default: the profile count)");
  cmd->add_option("--stages", opts.stages,
                  "Stage names: a preset name (\"mm\") or a comma-separated list");
  cmd->add_option("--epsilon", opts.epsilon, "Centroid coordinate equality tolerance")
      ->capture_default_str();
  cmd->add_option("--labels", opts.labels,
                  "Comma-separated label names, lowest first (default: a,b,c,d,e)");
  cmd->add_option("--input", opts.input, "Input file format")
      ->check(CLI::IsMember({"auto", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opts.output, "Write the report to a file instead of stdout");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) out.push_back(current);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LabelSet make_labels(const CommonOptions& opts) {
  if (opts.labels.empty()) return LabelSet();
  return LabelSet(split_csv(opts.labels));
}

ParseOptions make_parse_options(const CommonOptions& opts, const std::string& path) {
  ParseOptions parse;
  if (!opts.stages.empty()) {
    if (auto preset = stage_preset(opts.stages))
      parse.stage_names = *preset;
    else
      parse.stage_names = split_csv(opts.stages);
  }
  parse.fallback_group_name = std::filesystem::path(path).stem().string();
  if (parse.fallback_group_name.empty()) parse.fallback_group_name = "group";
  return parse;
}

InputFormat input_format(const CommonOptions& opts) {
  if (opts.input == "json") return InputFormat::Structured;
  if (opts.input == "csv") return InputFormat::Tabular;
  return InputFormat::Auto;
}

std::vector<GroupDataset> load_groups(const std::vector<std::string>& paths,
                                      const CommonOptions& opts, const LabelSet& labels) {
  std::vector<GroupDataset> groups;
  groups.reserve(paths.size());
  for (const std::string& path : paths) {
    try {
      groups.push_back(parse_group_file(read_file(path), input_format(opts), labels,
                                        make_parse_options(opts, path)));
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  return groups;
}

AnalyzeOptions make_analyze_options(const CommonOptions& opts) {
  AnalyzeOptions out;
  out.shannon_normalizer = opts.normalizer;
  out.epsilon = opts.epsilon;
  out.combined_measures = opts.with_measures;
  return out;
}

void emit(const AnalysisReport& report, const CommonOptions& opts) {
  OutputFormat format = OutputFormat::Text;
  if (opts.format == "json") format = OutputFormat::Json;
  if (opts.format == "svg") format = OutputFormat::Svg;
  const std::string rendered = render_report(report, format, RenderOptions{opts.precision});
  if (opts.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw ValidationError("cannot write file '" + opts.output + "'");
    out << rendered;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy multi-stage performance analytics: quantized stage sets, profile\n"
               "distributions, possibilistic uncertainty and centroid comparison."};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  std::string analyze_path;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a single group file");
  analyze_cmd->add_option("file", analyze_path, "Group data file")->required();
  add_common(analyze_cmd, analyze_opts);

  CommonOptions compare_opts;
  std::vector<std::string> compare_paths;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Analyze several groups and compare them stage by stage");
  compare_cmd->add_option("files", compare_paths, "Group data files")->expected(2, -1);
  add_common(compare_cmd, compare_opts);
  compare_cmd->add_flag("--with-measures", compare_opts.with_measures,
                        "Also compute strife/non-specificity on the combined distribution");

  CommonOptions combine_opts;
  std::vector<std::string> combine_paths;
  CLI::App* combine_cmd = app.add_subcommand(
      "combine", "Pseudo-frequency view of several groups (combined distributions only)");
  combine_cmd->add_option("files", combine_paths, "Group data files")->expected(2, -1);
  add_common(combine_cmd, combine_opts);
  combine_cmd->add_flag("--with-measures", combine_opts.with_measures,
                        "Also compute strife/non-specificity on the combined distribution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (analyze_cmd->parsed()) {
      const LabelSet labels = make_labels(analyze_opts);
      const auto groups = load_groups({analyze_path}, analyze_opts, labels);
      emit(analyze(groups.front(), labels, make_analyze_options(analyze_opts)), analyze_opts);
    } else if (compare_cmd->parsed()) {
      const LabelSet labels = make_labels(compare_opts);
      const auto groups = load_groups(compare_paths, compare_opts, labels);
      emit(compare_groups(groups, labels, make_analyze_options(compare_opts)), compare_opts);
    } else if (combine_cmd->parsed()) {
      const LabelSet labels = make_labels(combine_opts);
      const auto groups = load_groups(combine_paths, combine_opts, labels);
      emit(combine_groups(groups, labels, make_analyze_options(combine_opts)), combine_opts);
    }
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
