#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrovian/enumerate.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/swf.hpp"

namespace arrovian {

// The concrete input/output pair (or profile) exhibiting a violation.
// Re-evaluating the stored input must reproduce the stored observation.
struct Counterexample {
  std::string description;
  std::optional<int> component;                   // 1-based j
  std::optional<PairwisePreferences> row;         // offending row input
  std::optional<Ternary> observed;                // component output on `row`
  std::optional<Profile> profile;                 // offending profile input
  std::optional<PreferenceRelation> aggregate;    // aggregate on `profile`
};

struct AxiomVerdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::optional<int> dictator;  // 1-based individual (non-dictatorship check)
};

namespace detail {

inline AxiomVerdict fail_on_row(std::string description, int j,
                                const PairwisePreferences& row, Ternary observed) {
  AxiomVerdict v;
  v.holds = false;
  Counterexample c;
  c.description = std::move(description);
  c.component = j + 1;
  c.row = row;
  c.observed = observed;
  v.counterexample = std::move(c);
  return v;
}

}  // namespace detail

// Unanimity: both unanimous strict rows aggregate to the shared value for
// every component.
inline AxiomVerdict check_unanimity(const IiaSwf& w) {
  const int n = w.individuals();
  for (int j = 0; j < 3; ++j) {
    for (Ternary x : {Ternary::Zero, Ternary::One}) {
      const PairwisePreferences dx = delta(x, n);
      const Ternary got = w.component(j)(dx);
      if (got != x) {
        return detail::fail_on_row(
            "component " + std::to_string(j + 1) + " maps the unanimous row " +
                dx.symbols() + " to " + to_symbol(got) + " instead of " +
                to_symbol(x),
            j, dx, got);
      }
    }
  }
  return {};
}

// True when individual i's strict votes fix component j's output exactly.
// i is 1-based, j is 0-based.
inline bool dictates(const IiaSwf& w, int i, int j) {
  const int n = w.individuals();
  if (i < 1 || i > n) throw IndexOutOfRange("individual index out of range");
  const std::uint64_t count = detail::pow_u64(3, n);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    const PairwisePreferences r = PairwisePreferences::from_rank(rank, n);
    if (is_strict(r[i - 1]) && w.component(j)(r) != r[i - 1]) return false;
  }
  return true;
}

// First individual (1-based) dictating every component, if any.
inline std::optional<int> full_dictator(const IiaSwf& w) {
  for (int i = 1; i <= w.individuals(); ++i) {
    bool all = true;
    for (int j = 0; j < 3 && all; ++j) all = dictates(w, i, j);
    if (all) return i;
  }
  return std::nullopt;
}

// Non-dictatorship: no individual dictates any single component. The verdict
// reports the first dictating (individual, component) pair found.
inline AxiomVerdict check_non_dictatorship(const IiaSwf& w) {
  for (int i = 1; i <= w.individuals(); ++i) {
    for (int j = 0; j < 3; ++j) {
      if (dictates(w, i, j)) {
        AxiomVerdict v;
        v.holds = false;
        v.dictator = i;
        Counterexample c;
        c.description = "individual " + std::to_string(i) +
                        "'s strict votes always prevail on component " +
                        std::to_string(j + 1);
        c.component = j + 1;
        v.counterexample = std::move(c);
        return v;
      }
    }
  }
  return {};
}

// Unrestricted domain: no profile aggregates to a cycle. Exhaustive over all
// 13^n profiles; the counterexample is the first cycle in enumeration order.
inline AxiomVerdict check_unrestricted_domain(const IiaSwf& w) {
  const int n = w.individuals();
  if (n > 6) throw TooLarge("unrestricted-domain sweep capped at n <= 6");
  const ProfileSpace space(n);
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Profile m = space.at(rank);
    const PreferenceRelation agg = w.apply(m);
    if (classify(agg).cycle()) {
      AxiomVerdict v;
      v.holds = false;
      Counterexample c;
      c.description = "profile " + m.column_symbols() +
                      " aggregates to the cycle " + agg.symbols();
      c.profile = m;
      c.aggregate = agg;
      v.counterexample = std::move(c);
      return v;
    }
  }
  return {};
}

// Strictness preservation: strict rows never aggregate to indifference.
inline AxiomVerdict check_strictness_preservation(const IiaSwf& w) {
  const int n = w.individuals();
  for (int j = 0; j < 3; ++j) {
    for (const auto& r : enumerate_strict_pairs(n)) {
      const Ternary got = w.component(j)(r);
      if (!is_strict(got)) {
        return detail::fail_on_row(
            "component " + std::to_string(j + 1) + " maps the strict row " +
                r.symbols() + " to e",
            j, r, got);
      }
    }
  }
  return {};
}

// Strict neutrality: on strict rows, every component is odd under negation
// and all components agree.
inline AxiomVerdict check_strict_neutrality(const IiaSwf& w) {
  const int n = w.individuals();
  for (const auto& x : enumerate_strict_pairs(n)) {
    for (int j = 0; j < 3; ++j) {
      const Ternary lhs = w.component(j)(x.negated());
      const Ternary rhs = neg(w.component(j)(x));
      if (lhs != rhs) {
        return detail::fail_on_row(
            "component " + std::to_string(j + 1) + " is not odd on " +
                x.symbols() + ": s(" + x.negated().symbols() + ") = " +
                to_symbol(lhs) + " but neg s(" + x.symbols() + ") = " +
                to_symbol(rhs),
            j, x, lhs);
      }
    }
    const Ternary s1 = w.component(0)(x);
    for (int j = 1; j < 3; ++j) {
      const Ternary sj = w.component(j)(x);
      if (sj != s1) {
        return detail::fail_on_row(
            "components 1 and " + std::to_string(j + 1) + " disagree on the "
                "strict row " + x.symbols() + ": " + to_symbol(s1) + " vs " +
                to_symbol(sj),
            j, x, sj);
      }
    }
  }
  return {};
}

// Pareto indifference: the all-indifferent row aggregates to indifference.
inline AxiomVerdict check_pareto_indifference(const IiaSwf& w) {
  const PairwisePreferences de = delta(Ternary::E, w.individuals());
  for (int j = 0; j < 3; ++j) {
    const Ternary got = w.component(j)(de);
    if (got != Ternary::E) {
      return detail::fail_on_row(
          "component " + std::to_string(j + 1) + " maps the all-indifferent "
              "row to " + std::string(1, to_symbol(got)),
          j, de, got);
    }
  }
  return {};
}

// Full neutrality: for every row r (indifference allowed) and all component
// pairs, s_i(neg r) = neg s_j(r) and s_i(r) = s_j(r).
inline AxiomVerdict check_full_neutrality(const IiaSwf& w) {
  const int n = w.individuals();
  for (const auto& r : enumerate_pairs(n)) {
    const PairwisePreferences nr = r.negated();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Ternary odd_lhs = w.component(i)(nr);
        const Ternary odd_rhs = neg(w.component(j)(r));
        if (odd_lhs != odd_rhs) {
          return detail::fail_on_row(
              "s" + std::to_string(i + 1) + "(" + nr.symbols() + ") = " +
                  to_symbol(odd_lhs) + " but neg s" + std::to_string(j + 1) +
                  "(" + r.symbols() + ") = " + to_symbol(odd_rhs),
              i, nr, odd_lhs);
        }
        const Ternary same_lhs = w.component(i)(r);
        const Ternary same_rhs = w.component(j)(r);
        if (same_lhs != same_rhs) {
          return detail::fail_on_row(
              "s" + std::to_string(i + 1) + " and s" + std::to_string(j + 1) +
                  " disagree on " + r.symbols(),
              i, r, same_lhs);
        }
      }
    }
  }
  return {};
}

// Positions (1-based) of the individuals voting 1 in r.
inline std::vector<int> votes_one(const PairwisePreferences& r) {
  std::vector<int> out;
  for (int i = 0; i < r.size(); ++i)
    if (r[i] == Ternary::One) out.push_back(i + 1);
  return out;
}

// All strict rows a component aggregates to 1, in enumeration order.
struct VotesAggregates {
  std::vector<PairwisePreferences> aggregates_one;
};

// j is 0-based.
inline VotesAggregates votes_aggregates(const IiaSwf& w, int j) {
  if (j < 0 || j >= 3) throw IndexOutOfRange("component index out of range");
  VotesAggregates out;
  for (const auto& r : enumerate_strict_pairs(w.individuals()))
    if (w.component(j)(r) == Ternary::One) out.aggregates_one.push_back(r);
  return out;
}

// Every checker, plus the dictator-or-cycle dichotomy fields. The dichotomy
// is reported, not assumed: both fields are populated from their own checks.
struct FullReport {
  int individuals = 0;
  AxiomVerdict unanimity;
  AxiomVerdict non_dictatorship;
  AxiomVerdict unrestricted_domain;
  AxiomVerdict strictness_preservation;
  AxiomVerdict strict_neutrality;
  AxiomVerdict pareto_indifference;
  AxiomVerdict full_neutrality;
  bool arrow_applicable = false;  // unanimity holds
  std::optional<int> arrow_dictator;
  std::optional<std::pair<Profile, PreferenceRelation>> arrow_cycle;
};

inline FullReport full_report(const IiaSwf& w) {
  FullReport rep;
  rep.individuals = w.individuals();
  rep.unanimity = check_unanimity(w);
  rep.non_dictatorship = check_non_dictatorship(w);
  rep.unrestricted_domain = check_unrestricted_domain(w);
  rep.strictness_preservation = check_strictness_preservation(w);
  rep.strict_neutrality = check_strict_neutrality(w);
  rep.pareto_indifference = check_pareto_indifference(w);
  rep.full_neutrality = check_full_neutrality(w);
  rep.arrow_applicable = rep.unanimity.holds;
  if (rep.arrow_applicable) {
    rep.arrow_dictator = full_dictator(w);
    if (!rep.unrestricted_domain.holds) {
      const auto& c = *rep.unrestricted_domain.counterexample;
      rep.arrow_cycle = std::make_pair(*c.profile, *c.aggregate);
    }
  }
  return rep;
}

}  // namespace arrovian
