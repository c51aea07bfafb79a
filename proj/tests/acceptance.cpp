// Apache License, Version 2.0, refer to LICENSE.txt
//
// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fuzzproc/analysis.hpp"
#include "fuzzproc/errors.hpp"
#include "fuzzproc/render.hpp"
#include "test_support.hpp"

using namespace fuzzproc;

namespace {

int failures = 0;
int current_criterion = 0;
bool current_ok = true;
std::string current_detail;

void expect(bool condition, const std::string& what) {
  if (!condition && current_ok) {
    current_ok = false;
    current_detail = what;
  }
}

void run_criterion(int number, const std::string& description,
                   const std::function<void()>& body) {
  current_criterion = number;
  current_ok = true;
  current_detail.clear();
  try {
    body();
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  if (current_ok) {
    std::printf("criterion %d: PASS — %s\n", number, description.c_str());
  } else {
    ++failures;
    std::printf("criterion %d: FAIL — %s (%s)\n", number, description.c_str(),
                current_detail.c_str());
  }
}

std::vector<double> reference_distribution(int half_count, int low_count) {
  std::vector<double> r{1.0, 1.0};
  r.insert(r.end(), half_count, 0.5);
  r.insert(r.end(), low_count, 0.258);
  return r;
}

GroupDataset reference_group1() {
  GroupDataset g;
  g.name = "group1";
  g.size = 35;
  g.stages = {StageData{"S1", StageCounts{35, {0, 0, 15, 12, 8}}},
              StageData{"S2", StageCounts{35, {0, 0, 20, 11, 4}}},
              StageData{"S3", StageCounts{35, {8, 8, 8, 7, 4}}}};
  return g;
}

GroupDataset reference_group2() {
  GroupDataset g;
  g.name = "group2";
  g.size = 30;
  g.stages = {StageData{"S1", StageCounts{30, {0, 7, 15, 8, 0}}},
              StageData{"S2", StageCounts{30, {7, 8, 15, 0, 0}}},
              StageData{"S3", StageCounts{30, {8, 7, 10, 5, 0}}}};
  return g;
}

std::vector<Rational> grades_of(const FuzzyStageSet& set) {
  std::vector<Rational> out;
  for (const Grade& g : set.grades()) out.push_back(g.value());
  return out;
}

double microseconds_for(const std::function<void()>& body) {
  using clock = std::chrono::steady_clock;
  double best = 1e18;
  for (int round = 0; round < 5; ++round) {
    const auto start = clock::now();
    body();
    const auto stop = clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::micro>(stop - start).count());
  }
  return best;
}

volatile double sink = 0.0;

}  // namespace

// 1. ST/N/T on the reference ordered possibility distributions.
static void criterion1() {
  auto g1 = OrderedPossibilityDistribution::from_values(reference_distribution(6, 6));
  auto g2 = OrderedPossibilityDistribution::from_values(reference_distribution(6, 5));

  const double st1 = strife(g1), n1 = nonspecificity(g1), t1 = total_uncertainty(g1);
  expect(std::abs(st1 - 0.445) <= 0.01, "group-1 strife " + std::to_string(st1));
  expect(std::abs(n1 - 2.208) <= 0.01, "group-1 nonspecificity " + std::to_string(n1));
  expect(std::abs(t1 - 2.653) <= 0.02, "group-1 total " + std::to_string(t1));

  const double st2 = strife(g2), n2 = nonspecificity(g2), t2 = total_uncertainty(g2);
  expect(std::abs(st2 - 0.432) <= 0.01, "group-2 strife " + std::to_string(st2));
  expect(std::abs(n2 - 2.179) <= 0.01, "group-2 nonspecificity " + std::to_string(n2));
  expect(std::abs(t2 - 2.611) <= 0.02, "group-2 total " + std::to_string(t2));

  const double us1 = microseconds_for([&] { sink = total_uncertainty(g1); });
  const double us2 = microseconds_for([&] { sink = total_uncertainty(g2); });
  expect(us1 < 1000.0, "group-1 evaluation took " + std::to_string(us1) + "us");
  expect(us2 < 1000.0, "group-2 evaluation took " + std::to_string(us2) + "us");
}

// 2. Shannon entropy of the reference membership columns, normalizer 125.
static void criterion2() {
  auto column = [](int c62, int c31, int c16) {
    ProfileDistribution d(3, 5, WeightRole::Membership);
    std::size_t at = 0;
    for (int i = 0; i < c62; ++i) d.set_weight(at++, Rational::parse("0.062"));
    for (int i = 0; i < c31; ++i) d.set_weight(at++, Rational::parse("0.031"));
    for (int i = 0; i < c16; ++i) d.set_weight(at++, Rational::parse("0.016"));
    return d;
  };
  const double h1 = shannon_entropy(column(2, 6, 6), 125);
  const double h2 = shannon_entropy(column(2, 7, 6), 125);
  expect(std::abs(h1 - 0.289) <= 0.005, "H(m1 column) = " + std::to_string(h1));
  expect(std::abs(h2 - 0.312) <= 0.005, "H(m2 column) = " + std::to_string(h2));
}

// 3. The quantizer turns the reference counts into the printed stage sets.
static void criterion3() {
  const GroupDataset g1 = reference_group1();
  const GroupDataset g2 = reference_group2();
  using V = std::vector<Rational>;
  const Rational q(1, 4), h(1, 2), z(0);

  expect(grades_of(stage_fuzzy_set(g1.stages[0].counts, "A11")) == V{z, z, h, q, q},
         "A11 mismatch");
  expect(grades_of(stage_fuzzy_set(g1.stages[1].counts, "A12")) == V{z, z, h, q, z},
         "A12 mismatch");
  expect(grades_of(stage_fuzzy_set(g1.stages[2].counts, "A13")) == V{q, q, q, z, z},
         "A13 mismatch");
  expect(grades_of(stage_fuzzy_set(g2.stages[0].counts, "A21")) == V{z, q, h, q, z},
         "A21 mismatch");
  expect(grades_of(stage_fuzzy_set(g2.stages[1].counts, "A22")) == V{q, q, h, z, z},
         "A22 mismatch");
  expect(grades_of(stage_fuzzy_set(g2.stages[2].counts, "A23")) == V{q, q, q, z, z},
         "A23 mismatch");
}

// 4. Centroid fixtures (reference and corrected) and the per-stage verdicts.
static void criterion4() {
  auto xc = [](std::vector<Rational> heights) { return centroid_general(heights); };

  const CentroidPoint stage11 = xc({Rational(0), Rational(0), Rational(1, 2), Rational(1, 4),
                                    Rational(1, 4)});
  expect(stage11.x == Rational(13, 4) && stage11.x.value() == 3.25, "x_c11 != 3.25");
  expect(stage11.y == Rational(3, 16), "y_c11 != 3/16");

  const CentroidPoint uniform = xc({Rational(1, 5), Rational(1, 5), Rational(1, 5),
                                    Rational(1, 5), Rational(1, 5)});
  expect(uniform == CentroidPoint{Rational(5, 2), Rational(1, 10)}, "uniform centroid");
  expect(uniform.x.value() == 2.5 && uniform.y.value() == 0.1, "uniform centroid as doubles");

  expect(xc({0, 0, 0, 0, 1}) == CentroidPoint{Rational(9, 2), Rational(1, 2)}, "ideal centroid");
  expect(xc({1, 0, 0, 0, 0}) == CentroidPoint{Rational(1, 2), Rational(1, 2)}, "worst centroid");

  // corrections of the reference arithmetic slips, exact within 1e-12
  const CentroidPoint c21 = xc({Rational(0), Rational(1, 4), Rational(1, 2), Rational(1, 4),
                                Rational(0)});
  const CentroidPoint c12 = xc({Rational(0), Rational(0), Rational(2, 3), Rational(1, 3),
                                Rational(0)});
  const CentroidPoint c22 = xc({Rational(1, 4), Rational(1, 4), Rational(1, 2), Rational(0),
                                Rational(0)});
  expect(std::abs(c21.x.value() - 2.5) <= 1e-12 && c21.x == Rational(5, 2), "x_c21 != 2.5");
  expect(std::abs(c12.x.value() - 17.0 / 6.0) <= 1e-12 && c12.x == Rational(17, 6),
         "x_c12 != 17/6");
  expect(std::abs(c22.x.value() - 1.75) <= 1e-12 && c22.x == Rational(7, 4), "x_c22 != 1.75");

  const std::vector<GroupDataset> datasets{reference_group1(), reference_group2()};
  const AnalysisReport report = compare_groups(datasets, LabelSet());
  expect(report.comparisons.size() == 3, "expected three per-stage verdicts");
  expect(report.comparisons[0].outcome.verdict == Verdict::FirstBetter, "stage-1 verdict");
  expect(report.comparisons[1].outcome.verdict == Verdict::FirstBetter, "stage-2 verdict");
  expect(report.comparisons[2].outcome.verdict == Verdict::Tie, "stage-3 verdict");
}

// 5. Exact equivalence with the brute-force oracle on 1000 random triples,
//    plus closed-form vs quadrature centroids, all inside 10 seconds.
static void criterion5() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::int64_t> group_size(5, 200);
  int compared = 0, degenerate = 0;

  for (int round = 0; round < 1000; ++round) {
    const std::int64_t n = group_size(rng);
    std::vector<StageCounts> counts;
    std::vector<FuzzyStageSet> sets;
    for (int s = 0; s < 3; ++s) {
      counts.push_back(testsupport::random_counts(rng, n, 5));
      sets.push_back(stage_fuzzy_set(counts.back(), "S" + std::to_string(s + 1)));
    }

    // oracle route: interval transcription + plain nested loops
    std::vector<std::vector<Rational>> oracle_grades;
    for (const StageCounts& c : counts) {
      std::vector<Rational> g;
      for (std::int64_t count : c.counts)
        g.push_back(testsupport::quantizer_oracle(count, c.group_size));
      oracle_grades.push_back(std::move(g));
    }
    const auto table = testsupport::brute_force_memberships(oracle_grades[0], oracle_grades[1],
                                                            oracle_grades[2]);

    const ProfileDistribution membership = membership_distribution(sets);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
          const Rational& expected =
              table.value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(k)];
          if (membership.weight(Profile{{i, j, k}}) != expected) {
            expect(false, "membership mismatch in round " + std::to_string(round));
            return;
          }
        }

    if (table.total.is_zero()) {
      ++degenerate;
      bool threw = false;
      try {
        probabilities(membership);
      } catch (const DegenerateError&) {
        threw = true;
      }
      expect(threw, "degenerate case did not raise");
      continue;
    }

    const ProfileDistribution prob = probabilities(membership);
    const ProfileDistribution poss = possibilities(membership);
    for (std::size_t index = 0; index < membership.size(); ++index) {
      const Profile p = membership.profile_at(index);
      const Rational& m =
          table.value[static_cast<std::size_t>(p.labels[0])]
                     [static_cast<std::size_t>(p.labels[1])]
                     [static_cast<std::size_t>(p.labels[2])];
      if (prob.weight(index) != m / table.total || poss.weight(index) != m / table.max) {
        expect(false, "probability/possibility mismatch in round " + std::to_string(round));
        return;
      }
    }

    for (const FuzzyStageSet& set : sets) {
      if (set.all_zero()) continue;
      const NormalizedFuzzySet normalized = normalize(set);
      const CentroidPoint exact = centroid(normalized);
      std::vector<double> heights;
      for (const Rational& w : normalized.weights()) heights.push_back(w.value());
      const NumericCentroid numeric = centroid_by_integration(heights);
      expect(std::abs(exact.x.value() - numeric.x) <= 1e-9, "centroid x vs quadrature");
      expect(std::abs(exact.y.value() - numeric.y) <= 1e-9, "centroid y vs quadrature");
    }
    ++compared;
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(compared + degenerate == 1000, "not all rounds ran");
  expect(compared > 0, "no nondegenerate rounds");
  expect(seconds < 10.0, "oracle sweep took " + std::to_string(seconds) + "s");
}

// 6. Property suite: the distributional and centroid invariants on >= 500
//    random cases with zero failures.
static void criterion6() {
  std::mt19937 rng(9001);
  std::uniform_int_distribution<std::int64_t> group_size(5, 200);
  std::uniform_int_distribution<int> numerator(0, 32);
  std::uniform_int_distribution<int> scale_part(1, 12);
  std::uniform_int_distribution<std::size_t> ones_length(2, 200);
  int cases = 0;

  for (int round = 0; round < 2000 && cases < 500; ++round) {
    const std::int64_t n = group_size(rng);
    std::vector<FuzzyStageSet> sets;
    for (int s = 0; s < 3; ++s)
      sets.push_back(stage_fuzzy_set(testsupport::random_counts(rng, n, 5), "S"));
    const ProfileDistribution membership = membership_distribution(sets);
    if (membership.total().is_zero()) continue;
    ++cases;

    const ProfileDistribution prob = probabilities(membership);
    if (prob.total() != Rational(1)) return expect(false, "sum p != 1");
    const ProfileDistribution poss = possibilities(membership);
    if (poss.max_weight() != Rational(1)) return expect(false, "max r != 1");

    const auto ordered = ordered_possibility(poss);
    if (!(strife(ordered) >= 0.0)) return expect(false, "strife < 0");
    if (!(nonspecificity(ordered) >= 0.0)) return expect(false, "nonspecificity < 0");

    ProfileDistribution as_weights(3, 5, WeightRole::Membership);
    for (std::size_t i = 0; i < prob.size(); ++i) as_weights.set_weight(i, prob.weight(i));
    const double h = shannon_entropy(as_weights, 125);
    if (!(h >= 0.0 && h <= 1.0 + 1e-12)) return expect(false, "H outside [0, 1]");

    const std::size_t m = ones_length(rng);
    const auto ones = OrderedPossibilityDistribution::from_values(std::vector<double>(m, 1.0));
    if (std::abs(nonspecificity(ones) - std::log2(static_cast<double>(m))) > 1e-12)
      return expect(false, "N(1^m) != log2 m");

    for (const FuzzyStageSet& set : sets) {
      if (set.all_zero()) continue;
      const CentroidPoint c = centroid(normalize(set));
      if (!(c.x >= Rational(1, 2) && c.x <= Rational(9, 2)))
        return expect(false, "x_c out of bounds");
      if (!(c.y >= Rational(1, 10) && c.y <= Rational(1, 2)))
        return expect(false, "y_c out of bounds");
    }

    // antisymmetry and scale invariance of the comparison criterion
    std::vector<Rational> a, b;
    bool any_a = false, any_b = false;
    for (int i = 0; i < 5; ++i) {
      a.push_back(Rational(numerator(rng), 32));
      b.push_back(Rational(numerator(rng), 32));
      any_a = any_a || !a.back().is_zero();
      any_b = any_b || !b.back().is_zero();
    }
    if (any_a && any_b) {
      const ComparisonOutcome ab = compare_centroids(centroid_general(a), centroid_general(b), 5);
      const ComparisonOutcome ba = compare_centroids(centroid_general(b), centroid_general(a), 5);
      const bool antisymmetric =
          ab.verdict == Verdict::Tie
              ? ba.verdict == Verdict::Tie
              : (ab.verdict == Verdict::FirstBetter) == (ba.verdict == Verdict::SecondBetter);
      if (!antisymmetric) return expect(false, "comparison not antisymmetric");
      const Rational scale(scale_part(rng), scale_part(rng));
      std::vector<Rational> sa, sb;
      for (const Rational& hgt : a) sa.push_back(hgt * scale);
      for (const Rational& hgt : b) sb.push_back(hgt * scale);
      if (compare_centroids(centroid_general(sa), centroid_general(sb), 5) != ab)
        return expect(false, "verdict not scale invariant");
    }
  }

  // endpoint cases once
  ProfileDistribution uniform(3, 5, WeightRole::Membership);
  for (std::size_t i = 0; i < uniform.size(); ++i) uniform.set_weight(i, Rational(1, 125));
  expect(std::abs(shannon_entropy(uniform, 125) - 1.0) <= 1e-12, "uniform H != 1");
  ProfileDistribution crisp(3, 5, WeightRole::Membership);
  crisp.set_weight(0, Rational(1));
  expect(shannon_entropy(crisp, 125) == 0.0, "crisp H != 0");

  expect(cases >= 500, "only " + std::to_string(cases) + " property cases ran");
}

// 7. Errata regression: the exact pipeline contradicts the reference table on
//    (c, c, b) and makes the groups' H and T identical; the reference group
//    ranking by T is not reproducible from the raw data.
static void criterion7() {
  const AnalysisReport r1 = analyze(reference_group1(), LabelSet());
  const AnalysisReport r2 = analyze(reference_group2(), LabelSet());
  const Profile ccb{{2, 2, 1}};
  expect(r1.groups[0].membership.weight(ccb) == Rational(1, 16), "group-1 m(c,c,b) != 1/16");
  expect(r2.groups[0].membership.weight(ccb) == Rational(1, 16), "group-2 m(c,c,b) != 1/16");

  const double h_gap = std::abs(r1.groups[0].uncertainty.shannon -
                                r2.groups[0].uncertainty.shannon);
  const double t_gap = std::abs(r1.groups[0].uncertainty.total -
                                r2.groups[0].uncertainty.total);
  expect(h_gap <= 1e-12, "H differs across groups by " + std::to_string(h_gap));
  expect(t_gap <= 1e-12, "T differs across groups by " + std::to_string(t_gap));

  // from the reference (rounded) distributions the groups differ clearly, so
  // the reference ranking exists there and only there
  const double t1_reference =
      total_uncertainty(OrderedPossibilityDistribution::from_values(reference_distribution(6, 6)));
  const double t2_reference =
      total_uncertainty(OrderedPossibilityDistribution::from_values(reference_distribution(6, 5)));
  expect(t2_reference < t1_reference - 0.02, "reference distributions no longer rank group 2 first");
}

int main() {
  run_criterion(1, "ST/N/T reproduce the reference values on the reference distributions",
                criterion1);
  run_criterion(2, "Shannon entropy reproduces the reference values on the reference columns",
                criterion2);
  run_criterion(3, "reference counts quantize to the reference stage sets exactly", criterion3);
  run_criterion(4, "centroid fixtures and per-stage verdicts", criterion4);
  run_criterion(5, "exact oracle equivalence on 1000 random triples under 10s", criterion5);
  run_criterion(6, "property suite on >= 500 random cases", criterion6);
  run_criterion(7, "errata regression: exact pipeline pins the documented discrepancies",
                criterion7);
  if (failures == 0)
    std::printf("all 7 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
