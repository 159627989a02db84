#include <catch2/catch_amalgamated.hpp>

#include "arrovian/axioms.hpp"
#include "arrovian/enumerate.hpp"
#include "arrovian/swf.hpp"

using namespace arrovian;

namespace {

// majority components except that component 2 copies individual 1's vote
IiaSwf majority_with_dictator_component() {
  return IiaSwf(pairwise_majority(3).component(0), dictator(1, 3).component(0),
                pairwise_majority(3).component(0));
}

}  // namespace

TEST_CASE("unanimity checker", "[axioms]") {
  CHECK(check_unanimity(pairwise_majority(3)).holds);
  CHECK(check_unanimity(dictator(1, 2)).holds);

  const auto v = check_unanimity(indifference_swf(2));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.counterexample.has_value());
  CHECK(v.counterexample->component == 1);
  CHECK(v.counterexample->row == delta(Ternary::Zero, 2));
  CHECK(v.counterexample->observed == Ternary::E);
}

TEST_CASE("non-dictatorship checker", "[axioms]") {
  CHECK(check_non_dictatorship(pairwise_majority(3)).holds);

  const auto v = check_non_dictatorship(dictator(2, 3));
  REQUIRE_FALSE(v.holds);
  CHECK(v.dictator == 2);

  const auto h = check_non_dictatorship(hierarchical_dictator({1, 2}, 2));
  REQUIRE_FALSE(h.holds);
  CHECK(h.dictator == 1);
}

TEST_CASE("dictates quantifies over strict votes only", "[axioms]") {
  CHECK(dictates(dictator(1, 2), 1, 0));
  CHECK_FALSE(dictates(dictator(1, 2), 2, 0));
  // the hierarchy's head dictates; the tail does not
  CHECK(dictates(hierarchical_dictator({1, 2}, 2), 1, 0));
  CHECK_FALSE(dictates(hierarchical_dictator({1, 2}, 2), 2, 0));
  CHECK(full_dictator(dictator(2, 3)) == 2);
  CHECK_FALSE(full_dictator(pairwise_majority(3)).has_value());
}

TEST_CASE("unrestricted domain checker", "[axioms]") {
  CHECK(check_unrestricted_domain(dictator(1, 3)).holds);

  const auto v = check_unrestricted_domain(pairwise_majority(3));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.counterexample.has_value());
  REQUIRE(v.counterexample->profile.has_value());
  REQUIRE(v.counterexample->aggregate.has_value());
  // the counterexample re-validates
  CHECK(pairwise_majority(3).apply(*v.counterexample->profile) ==
        *v.counterexample->aggregate);
  CHECK(classify(*v.counterexample->aggregate).cycle());

  const auto c = check_unrestricted_domain(
      constant_swf(PreferenceRelation::from_symbols("111"), 2));
  REQUIRE_FALSE(c.holds);
  CHECK(*c.counterexample->profile == enumerate_profiles(2).front());

  CHECK_THROWS_AS(check_unrestricted_domain(pairwise_majority(7)), TooLarge);
}

TEST_CASE("strictness preservation checker", "[axioms]") {
  CHECK(check_strictness_preservation(pairwise_majority(3)).holds);
  CHECK(check_strictness_preservation(dictator(1, 2)).holds);

  const auto v = check_strictness_preservation(pairwise_majority(2));
  REQUIRE_FALSE(v.holds);
  CHECK(v.counterexample->component == 1);
  CHECK(v.counterexample->row == PairwisePreferences::from_symbols("01"));
  CHECK(v.counterexample->observed == Ternary::E);
}

TEST_CASE("strict neutrality checker", "[axioms]") {
  CHECK(check_strict_neutrality(pairwise_majority(3)).holds);
  CHECK(check_strict_neutrality(dictator(1, 3)).holds);

  const auto v = check_strict_neutrality(majority_with_dictator_component());
  REQUIRE_FALSE(v.holds);
  // first disagreement in scan order: components 1 and 2 on (0,1,1)
  CHECK(v.counterexample->row == PairwisePreferences::from_symbols("011"));
}

TEST_CASE("pareto indifference checker", "[axioms]") {
  CHECK(check_pareto_indifference(pairwise_majority(3)).holds);
  CHECK(check_pareto_indifference(dictator(1, 2)).holds);

  const auto v = check_pareto_indifference(
      constant_swf(PreferenceRelation::from_symbols("001"), 2));
  REQUIRE_FALSE(v.holds);
  CHECK(v.counterexample->component == 1);
  CHECK(v.counterexample->observed == Ternary::Zero);
}

TEST_CASE("full neutrality checker", "[axioms]") {
  CHECK(check_full_neutrality(pairwise_majority(3)).holds);
  CHECK(check_full_neutrality(hierarchical_dictator({1, 2}, 2)).holds);

  const auto majority = pairwise_majority(3);
  const IiaSwf skewed(
      majority.component(0),
      majority.component(1).with(delta(Ternary::E, 3), Ternary::Zero),
      majority.component(2));
  CHECK_FALSE(check_full_neutrality(skewed).holds);
  CHECK_FALSE(check_pareto_indifference(skewed).holds);
}

TEST_CASE("votes and aggregates tabulation", "[axioms]") {
  const auto va = votes_aggregates(pairwise_majority(3), 0);
  REQUIRE(va.aggregates_one.size() == 4);
  CHECK(va.aggregates_one[0] == PairwisePreferences::from_symbols("011"));
  CHECK(va.aggregates_one[1] == PairwisePreferences::from_symbols("101"));
  CHECK(va.aggregates_one[2] == PairwisePreferences::from_symbols("110"));
  CHECK(va.aggregates_one[3] == PairwisePreferences::from_symbols("111"));

  const auto vd = votes_aggregates(dictator(2, 2), 0);
  REQUIRE(vd.aggregates_one.size() == 2);
  CHECK(vd.aggregates_one[0] == PairwisePreferences::from_symbols("01"));
  CHECK(vd.aggregates_one[1] == PairwisePreferences::from_symbols("11"));

  CHECK(votes_one(PairwisePreferences::from_symbols("101")) ==
        std::vector<int>{1, 3});
  CHECK(votes_one(PairwisePreferences::from_symbols("0e0")).empty());
}

TEST_CASE("full report on majority", "[axioms]") {
  const auto rep = full_report(pairwise_majority(3));
  CHECK(rep.unanimity.holds);
  CHECK(rep.non_dictatorship.holds);
  CHECK_FALSE(rep.unrestricted_domain.holds);
  CHECK(rep.strictness_preservation.holds);
  CHECK(rep.strict_neutrality.holds);
  CHECK(rep.pareto_indifference.holds);
  CHECK(rep.full_neutrality.holds);
  CHECK(rep.arrow_applicable);
  CHECK_FALSE(rep.arrow_dictator.has_value());
  REQUIRE(rep.arrow_cycle.has_value());
  CHECK(classify(rep.arrow_cycle->second).cycle());
}

TEST_CASE("full report on a dictator", "[axioms]") {
  const auto rep = full_report(dictator(1, 3));
  CHECK(rep.unrestricted_domain.holds);
  CHECK(rep.arrow_applicable);
  CHECK(rep.arrow_dictator == 1);
  CHECK_FALSE(rep.arrow_cycle.has_value());
  // exactly one branch of the dichotomy
  CHECK(rep.arrow_dictator.has_value() != rep.arrow_cycle.has_value());
}

TEST_CASE("full report when unanimity fails", "[axioms]") {
  const auto rep = full_report(indifference_swf(2));
  CHECK_FALSE(rep.unanimity.holds);
  CHECK_FALSE(rep.arrow_applicable);
}

TEST_CASE("row counterexamples re-validate", "[axioms]") {
  const IiaSwf fixtures[] = {indifference_swf(2), pairwise_majority(2),
                             majority_with_dictator_component(),
                             constant_swf(PreferenceRelation::from_symbols("001"), 2)};
  for (const auto& w : fixtures) {
    for (const auto& v :
         {check_unanimity(w), check_strictness_preservation(w),
          check_pareto_indifference(w)}) {
      if (v.holds) continue;
      REQUIRE(v.counterexample.has_value());
      REQUIRE(v.counterexample->row.has_value());
      REQUIRE(v.counterexample->component.has_value());
      REQUIRE(v.counterexample->observed.has_value());
      CHECK(w.component(*v.counterexample->component - 1)(*v.counterexample->row) ==
            *v.counterexample->observed);
    }
  }
}
