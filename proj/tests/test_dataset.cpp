// Apache License, Version 2.0, refer to LICENSE.txt
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzproc/dataset.hpp"
#include "fuzzproc/errors.hpp"
#include "test_support.hpp"

using namespace fuzzproc;
using testsupport::fixture_path;
using testsupport::read_file;

TEST_CASE("structured file parses into the reference group-1 dataset") {
  const LabelSet labels;
  GroupDataset g = parse_group_file(read_file(fixture_path("group1.json")), InputFormat::Auto,
                                    labels);
  CHECK(g.name == "group1");
  CHECK(g.size == 35);
  REQUIRE(g.stages.size() == 3);
  CHECK(g.stages[0].name == "Analysis/Mathematization");
  CHECK(g.stages[0].counts == StageCounts{35, {0, 0, 15, 12, 8}});
  CHECK(g.stages[1].counts == StageCounts{35, {0, 0, 20, 11, 4}});
  CHECK(g.stages[2].counts == StageCounts{35, {8, 8, 8, 7, 4}});
}

TEST_CASE("absent labels in a counts object mean zero") {
  const LabelSet labels;
  const std::string text = R"({"groupName":"g","groupSize":4,"stages":[
    {"name":"S1","counts":{"c":4}},
    {"name":"S2","counts":{"a":2,"b":2}}
  ]})";
  GroupDataset g = parse_group_file(text, InputFormat::Structured, labels);
  CHECK(g.stages[0].counts.counts == std::vector<std::int64_t>{0, 0, 4, 0, 0});
  CHECK(g.stages[1].counts.counts == std::vector<std::int64_t>{2, 2, 0, 0, 0});
}

TEST_CASE("tabular rows aggregate to the same dataset as the structured file") {
  const LabelSet labels;
  GroupDataset structured = parse_group_file(read_file(fixture_path("group2.json")),
                                             InputFormat::Auto, labels);
  ParseOptions options;
  options.fallback_group_name = "group2";
  GroupDataset tabular = parse_group_file(read_file(fixture_path("group2.csv")),
                                          InputFormat::Auto, labels, options);
  CHECK(structured == tabular);
}

TEST_CASE("numeric stage fields pick up the mm preset names") {
  const LabelSet labels;
  GroupDataset g = parse_group_file(read_file(fixture_path("group2.csv")), InputFormat::Tabular,
                                    labels);
  REQUIRE(g.stages.size() == 3);
  CHECK(g.stages[0].name == "Analysis/Mathematization");
  CHECK(g.stages[1].name == "Solution");
  CHECK(g.stages[2].name == "Validation/Implementation");
}

TEST_CASE("explicit stage names override the input") {
  const LabelSet labels;
  ParseOptions options;
  options.stage_names = {"first", "second", "third"};
  GroupDataset g = parse_group_file(read_file(fixture_path("group1.json")), InputFormat::Auto,
                                    labels, options);
  CHECK(g.stages[0].name == "first");
  CHECK(g.stages[2].name == "third");

  options.stage_names = {"only-one"};
  CHECK_THROWS_AS(parse_group_file(read_file(fixture_path("group1.json")), InputFormat::Auto,
                                   labels, options),
                  ValidationError);
}

TEST_CASE("a stage that does not sum to the group size is rejected") {
  const LabelSet labels;
  const std::string text = R"({"groupName":"g","groupSize":35,"stages":[
    {"name":"S1","counts":{"c":15,"d":12,"e":8}},
    {"name":"S2","counts":{"c":15,"d":12,"e":7}}
  ]})";
  CHECK_THROWS_WITH_AS(parse_group_file(text, InputFormat::Structured, labels),
                       "counts for stage 'S2' sum to 34, expected group size 35",
                       ValidationError);
}

TEST_CASE("unknown labels and malformed documents are validation errors") {
  const LabelSet labels;
  CHECK_THROWS_AS(parse_group_file(R"({"groupSize":1,"stages":[{"name":"S1","counts":{"z":1}}]})",
                                   InputFormat::Structured, labels),
                  ValidationError);
  CHECK_THROWS_AS(parse_group_file("{not json", InputFormat::Structured, labels),
                  ValidationError);
  CHECK_THROWS_AS(parse_group_file(R"({"groupSize":1})", InputFormat::Structured, labels),
                  ValidationError);
}

TEST_CASE("fewer than two stages is rejected in both formats") {
  const LabelSet labels;
  CHECK_THROWS_AS(parse_group_file(R"({"groupSize":2,"stages":[
        {"name":"S1","counts":{"a":2}}]})",
                                   InputFormat::Structured, labels),
                  ValidationError);
  CHECK_THROWS_AS(parse_group_file("e1,1,a\ne2,1,b\n", InputFormat::Tabular, labels),
                  ValidationError);
}

TEST_CASE("tabular duplicates and gaps are rejected") {
  const LabelSet labels;
  CHECK_THROWS_AS(parse_group_file("e1,1,a\ne1,1,b\ne1,2,a\n", InputFormat::Tabular, labels),
                  ValidationError);
  // e2 never shows up in stage 2
  CHECK_THROWS_AS(parse_group_file("e1,1,a\ne2,1,b\ne1,2,a\n", InputFormat::Tabular, labels),
                  ValidationError);
  CHECK_THROWS_AS(parse_group_file("e1,1\n", InputFormat::Tabular, labels), ValidationError);
  CHECK_THROWS_AS(parse_group_file("e1,1,zz\ne1,2,a\n", InputFormat::Tabular, labels),
                  ValidationError);
}

TEST_CASE("tabular parsing skips headers and comments") {
  const LabelSet labels;
  const std::string text =
      "# collected 2024-05-12\n"
      "entity,stage,label\n"
      "e1,1,c\n"
      "e2,1,d\n"
      "e1,2,a\n"
      "e2,2,b\n";
  GroupDataset g = parse_group_file(text, InputFormat::Tabular, labels);
  CHECK(g.size == 2);
  REQUIRE(g.stages.size() == 2);
  CHECK(g.stages[0].counts.counts == std::vector<std::int64_t>{0, 0, 1, 1, 0});
  CHECK(g.stages[1].counts.counts == std::vector<std::int64_t>{1, 1, 0, 0, 0});
}

TEST_CASE("format detection looks at the first meaningful byte") {
  CHECK(detect_format("  {\"groupSize\":1}") == InputFormat::Structured);
  CHECK(detect_format("e1,1,a\n") == InputFormat::Tabular);
}

TEST_CASE("stage presets") {
  auto mm = stage_preset("mm");
  REQUIRE(mm.has_value());
  CHECK(mm->size() == 3);
  CHECK((*mm)[0] == "Analysis/Mathematization");
  CHECK_FALSE(stage_preset("nope").has_value());
}

TEST_CASE("custom label sets flow through parsing") {
  const LabelSet labels(std::vector<std::string>{"low", "mid", "high"});
  const std::string text = R"({"groupName":"g","groupSize":6,"stages":[
    {"name":"S1","counts":{"low":2,"mid":2,"high":2}},
    {"name":"S2","counts":{"low":6}}
  ]})";
  GroupDataset g = parse_group_file(text, InputFormat::Structured, labels);
  CHECK(g.stages[0].counts.counts == std::vector<std::int64_t>{2, 2, 2});
}
