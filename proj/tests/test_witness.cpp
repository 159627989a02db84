#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "arrovian/enumerate.hpp"
#include "arrovian/swf.hpp"
#include "arrovian/witness.hpp"

using namespace arrovian;

namespace {

IiaSwf symmetric_from_symbols(const char* nine) {
  // table over Pair(2) in enumeration order: 00 0e 01 e0 ee e1 10 1e 11
  std::vector<Ternary> table;
  for (int i = 0; i < 9; ++i) table.push_back(*from_symbol(nine[i]));
  return IiaSwf::uniform(PairwiseComparisonFunction(2, table));
}

// Near-dictatorship of individual 1 with one overruled row: s(0e) = 1.
// Reaches the singleton-coalition case with an overruling row available.
IiaSwf case1_candidate() { return symmetric_from_symbols("010eee111"); }

// As above but s(1e) = 0, so the opposite construction also finds its row.
IiaSwf case1_pair_candidate() { return symmetric_from_symbols("010eee101"); }

// Individual 1 prevails except s(0e) = e: the overruling row for the
// singleton-coalition case does not exist, but oddness fails on weak rows.
IiaSwf blocked_case1_candidate() { return symmetric_from_symbols("0e0eee111"); }

// Fully neutral on all rows yet non-dictatorial and cycling; no construction
// applies and only the exhaustive fallback finds a witness.
IiaSwf neutral_gap_candidate() { return symmetric_from_symbols("0e0eee1e1"); }

// majority except component 3 negates the non-constant strict rows
IiaSwf skew_neutral_majority() {
  const auto maj = pairwise_majority(3);
  auto s3 = PairwiseComparisonFunction::tabulate(3, [](const PairwisePreferences& r) {
    const Ternary m = majority_value(r);
    const bool constant = r.vals().size() == 1;
    return r.strict() && !constant ? neg(m) : m;
  });
  return IiaSwf(maj.component(0), maj.component(1), s3);
}

IiaSwf majority_with_dictator_component() {
  return IiaSwf(pairwise_majority(3).component(0), dictator(1, 3).component(0),
                pairwise_majority(3).component(0));
}

void check_sound(const IiaSwf& w, const CycleWitness& witness) {
  CHECK(w.apply(witness.profile) == witness.aggregate);
  CHECK(classify(witness.aggregate).cycle());
}

}  // namespace

TEST_CASE("inconsistency of relations", "[witness]") {
  CHECK(is_inconsistent(PreferenceRelation::from_symbols("0e1"),
                        PreferenceRelation::from_symbols("1e1")));
  const auto all_e = PreferenceRelation::from_symbols("eee");
  for (const auto& t : enumerate_relations()) {
    CHECK_FALSE(is_inconsistent(all_e, t));
    CHECK_FALSE(is_inconsistent(t, all_e));
  }
  CHECK_THROWS_AS(is_inconsistent(PreferenceRelation::from_symbols("0e1"),
                                  PreferenceRelation::from_symbols("0101")),
                  DimensionMismatch);
}

TEST_CASE("strict profiles contradict their negations", "[witness]") {
  for (const auto& c1 : strict_orders3()) {
    for (const auto& c2 : strict_orders3()) {
      const auto m = Profile::from_columns({c1, c2});
      CHECK(contradicts(m, m.negated()));
    }
  }
  // an all-indifferent column blocks contradiction
  const auto m = Profile::from_columns({PreferenceRelation::from_symbols("eee"),
                                        PreferenceRelation::from_symbols("001")});
  CHECK_FALSE(contradicts(m, m.negated()));
}

TEST_CASE("strictness witness for two-voter majority", "[witness]") {
  const auto w = pairwise_majority(2);
  const auto witness = strictness_witness(w);
  REQUIRE(witness.has_value());
  CHECK(witness->provenance == Provenance::StrictnessLemma);
  check_sound(w, *witness);

  // first tied strict row is (0,1) on component 1; both unanimous-row
  // variants cycle, so the all-zero variant is returned
  CHECK(witness->profile.row(0) == PairwisePreferences::from_symbols("01"));
  CHECK(witness->profile.row(1) == PairwisePreferences::from_symbols("00"));
  CHECK(witness->profile.row(2) == PairwisePreferences::from_symbols("10"));
  CHECK(witness->aggregate == PreferenceRelation::from_symbols("e0e"));
}

TEST_CASE("strictness witness rotates with the tied component", "[witness]") {
  const auto maj = pairwise_majority(3);
  const IiaSwf w(maj.component(0),
                 maj.component(1).with(PairwisePreferences::from_symbols("001"),
                                       Ternary::E),
                 maj.component(2));
  const auto witness = strictness_witness(w);
  REQUIRE(witness.has_value());
  check_sound(w, *witness);
  // tied row sits at position 2; the unanimous-1 variant is the cycling one
  CHECK(witness->profile.row(0) == PairwisePreferences::from_symbols("110"));
  CHECK(witness->profile.row(1) == PairwisePreferences::from_symbols("001"));
  CHECK(witness->profile.row(2) == PairwisePreferences::from_symbols("111"));
  CHECK(witness->aggregate == PreferenceRelation::from_symbols("1e1"));
}

TEST_CASE("strictness witness is not applicable to odd majority", "[witness]") {
  CHECK_FALSE(strictness_witness(pairwise_majority(3)).has_value());
  CHECK_THROWS_AS(strictness_witness(indifference_swf(2)), PreconditionFailed);
}

TEST_CASE("neutrality witness finds component disagreement", "[witness]") {
  const auto w = skew_neutral_majority();
  REQUIRE(check_strictness_preservation(w).holds);
  const auto witness = neutrality_witness(w);
  REQUIRE(witness.has_value());
  CHECK(witness->provenance == Provenance::NeutralityLemma);
  check_sound(w, *witness);
  CHECK(witness->profile.row(0) == PairwisePreferences::from_symbols("001"));
  CHECK(witness->profile.row(1) == PairwisePreferences::from_symbols("000"));
  CHECK(witness->profile.row(2) == PairwisePreferences::from_symbols("110"));
  CHECK(witness->aggregate == PreferenceRelation::from_symbols("000"));
}

TEST_CASE("neutrality witness not applicable when neutrality holds", "[witness]") {
  CHECK_FALSE(neutrality_witness(pairwise_majority(3)).has_value());
  CHECK_FALSE(neutrality_witness(dictator(1, 2)).has_value());
  CHECK_THROWS_AS(neutrality_witness(pairwise_majority(2)), PreconditionFailed);
}

TEST_CASE("neutrality witness agrees with the checker", "[witness]") {
  // property: for unanimity + strictness-preserving rules, the witness is
  // produced exactly when strict neutrality fails
  const IiaSwf fixtures[] = {pairwise_majority(3), dictator(1, 3),
                             skew_neutral_majority(),
                             majority_with_dictator_component(),
                             hierarchical_dictator({2, 1, 3}, 3)};
  for (const auto& w : fixtures) {
    const bool holds = check_strict_neutrality(w).holds;
    CHECK(neutrality_witness(w).has_value() == !holds);
  }
}

TEST_CASE("arrow witness on majority takes the coalition case", "[witness]") {
  const auto w = pairwise_majority(3);
  const auto witness = arrow_witness(w);
  CHECK(witness.provenance == Provenance::ArrowCase2);
  check_sound(w, witness);
  CHECK(witness.profile.row(0) == PairwisePreferences::from_symbols("011"));
  CHECK(witness.profile.row(1) == PairwisePreferences::from_symbols("101"));
  CHECK(witness.profile.row(2) == PairwisePreferences::from_symbols("110"));
  CHECK(witness.aggregate == PreferenceRelation::from_symbols("111"));
}

TEST_CASE("arrow witness singleton-coalition case", "[witness]") {
  const auto w = case1_candidate();
  REQUIRE(check_unanimity(w).holds);
  REQUIRE(check_non_dictatorship(w).holds);
  const auto witness = arrow_witness(w);
  CHECK(witness.provenance == Provenance::ArrowCase1);
  check_sound(w, witness);
  CHECK(witness.profile.row(0) == PairwisePreferences::from_symbols("0e"));
  CHECK(witness.profile.row(1) == PairwisePreferences::from_symbols("10"));
  CHECK(witness.profile.row(2) == PairwisePreferences::from_symbols("11"));
  CHECK(witness.aggregate == PreferenceRelation::from_symbols("111"));
}

TEST_CASE("arrow witness falls back to weak-row neutrality", "[witness]") {
  const auto w = blocked_case1_candidate();
  REQUIRE(check_non_dictatorship(w).holds);
  REQUIRE(check_strictness_preservation(w).holds);
  REQUIRE(check_strict_neutrality(w).holds);
  const auto witness = arrow_witness(w);
  CHECK(witness.provenance == Provenance::ParetoNeutrality);
  check_sound(w, witness);
  CHECK(witness.aggregate == PreferenceRelation::from_symbols("e1e"));
}

TEST_CASE("arrow witness falls back to exhaustive search", "[witness]") {
  const auto w = neutral_gap_candidate();
  REQUIRE(check_non_dictatorship(w).holds);
  REQUIRE(check_full_neutrality(w).holds);
  const auto witness = arrow_witness(w);
  CHECK(witness.provenance == Provenance::ExhaustiveSearch);
  check_sound(w, witness);
}

TEST_CASE("arrow witness preconditions", "[witness]") {
  try {
    arrow_witness(dictator(1, 3));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.axiom == "non-dictatorship");
  }
  try {
    arrow_witness(indifference_swf(2));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.axiom == "unanimity");
  }
}

TEST_CASE("contradictory pair for majority", "[witness]") {
  const auto w = pairwise_majority(3);
  const auto pair = contradictory_pair(w);
  CHECK(pair.aggregate_m == PreferenceRelation::from_symbols("111"));
  CHECK(pair.aggregate_m_prime == PreferenceRelation::from_symbols("000"));
  CHECK(w.apply(pair.m) == pair.aggregate_m);
  CHECK(w.apply(pair.m_prime) == pair.aggregate_m_prime);
  CHECK(contradicts(pair.m, pair.m_prime));
  CHECK(pair.m_prime == pair.m.negated());
}

TEST_CASE("contradictory pair in the singleton-coalition case", "[witness]") {
  const auto w = case1_pair_candidate();
  const auto pair = contradictory_pair(w);
  CHECK(w.apply(pair.m) == PreferenceRelation::from_symbols("111"));
  CHECK(w.apply(pair.m_prime) == PreferenceRelation::from_symbols("000"));
  CHECK(contradicts(pair.m, pair.m_prime));
  CHECK(pair.m.row(0) == PairwisePreferences::from_symbols("0e"));
  CHECK(pair.m.row(1) == PairwisePreferences::from_symbols("10"));
  CHECK(pair.m.row(2) == PairwisePreferences::from_symbols("11"));
  CHECK(pair.m_prime.row(0) == PairwisePreferences::from_symbols("1e"));
  CHECK(pair.m_prime.row(1) == PairwisePreferences::from_symbols("01"));
  CHECK(pair.m_prime.row(2) == PairwisePreferences::from_symbols("00"));
}

TEST_CASE("contradictory pair reports missing rows explicitly", "[witness]") {
  CHECK_THROWS_AS(contradictory_pair(blocked_case1_candidate()),
                  InternalDichotomyError);
}

TEST_CASE("contradictory pair preconditions", "[witness]") {
  try {
    contradictory_pair(pairwise_majority(2));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& e) {
    CHECK(e.axiom == "strictness preservation");
  }
  CHECK_THROWS_AS(contradictory_pair(dictator(2, 3)), PreconditionFailed);
}

TEST_CASE("pareto witness finds weak-row neutrality violations", "[witness]") {
  const auto w = majority_with_dictator_component();
  REQUIRE(check_pareto_indifference(w).holds);
  const auto witness = pareto_witness(w);
  REQUIRE(witness.has_value());
  CHECK(witness->provenance == Provenance::ParetoNeutrality);
  check_sound(w, *witness);
  CHECK(witness->profile.row(0) == PairwisePreferences::from_symbols("0e1"));
  CHECK(witness->profile.row(1) == PairwisePreferences::from_symbols("1e0"));
  CHECK(witness->profile.row(2) == PairwisePreferences::from_symbols("eee"));
  CHECK(witness->aggregate == PreferenceRelation::from_symbols("e1e"));
}

TEST_CASE("pareto witness not applicable under full neutrality", "[witness]") {
  CHECK_FALSE(pareto_witness(pairwise_majority(3)).has_value());
  CHECK_FALSE(pareto_witness(dictator(2, 2)).has_value());
  CHECK_THROWS_AS(
      pareto_witness(constant_swf(PreferenceRelation::from_symbols("001"), 2)),
      PreconditionFailed);
}

TEST_CASE("pareto witness agrees with the full-neutrality checker", "[witness]") {
  const IiaSwf fixtures[] = {pairwise_majority(3), dictator(1, 3),
                             majority_with_dictator_component(),
                             hierarchical_dictator({1, 2}, 2),
                             neutral_gap_candidate()};
  for (const auto& w : fixtures) {
    if (!check_pareto_indifference(w).holds) continue;
    CHECK(pareto_witness(w).has_value() == !check_full_neutrality(w).holds);
  }
}

TEST_CASE("provenance names round-trip", "[witness]") {
  for (Provenance p : {Provenance::StrictnessLemma, Provenance::NeutralityLemma,
                       Provenance::ArrowCase1, Provenance::ArrowCase2,
                       Provenance::ParetoNeutrality, Provenance::ExhaustiveSearch})
    CHECK(provenance_from_name(provenance_name(p)) == p);
  CHECK_FALSE(provenance_from_name("nonsense").has_value());
}
