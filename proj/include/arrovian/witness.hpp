#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/axioms.hpp"
#include "arrovian/enumerate.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/swf.hpp"

namespace arrovian {

// Which construction produced a cycle witness.
enum class Provenance {
  StrictnessLemma,   // strict row aggregating to e
  NeutralityLemma,   // strict-neutrality violation
  ArrowCase1,        // minimal aggregate-1 coalition of size 1
  ArrowCase2,        // minimal aggregate-1 coalition of intermediate size
  ParetoNeutrality,  // neutrality violation on a weak row
  ExhaustiveSearch,  // first cycle-aggregating profile in enumeration order
};

inline std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::StrictnessLemma: return "strictness-lemma";
    case Provenance::NeutralityLemma: return "neutrality-lemma";
    case Provenance::ArrowCase1: return "arrow-case-1";
    case Provenance::ArrowCase2: return "arrow-case-2";
    case Provenance::ParetoNeutrality: return "pareto-neutrality";
    case Provenance::ExhaustiveSearch: return "exhaustive-search";
  }
  return "unknown";
}

inline std::optional<Provenance> provenance_from_name(std::string_view name) {
  for (Provenance p : {Provenance::StrictnessLemma, Provenance::NeutralityLemma,
                       Provenance::ArrowCase1, Provenance::ArrowCase2,
                       Provenance::ParetoNeutrality, Provenance::ExhaustiveSearch}) {
    if (provenance_name(p) == name) return p;
  }
  return std::nullopt;
}

// A profile together with its cycle aggregate, re-validated at construction.
struct CycleWitness {
  Profile profile;
  PreferenceRelation aggregate;
  Provenance provenance;
};

// Two profiles aggregating to the opposite all-strict cycles and
// contradicting one another columnwise.
struct ContradictoryPair {
  Profile m;        // aggregates to (1,1,1)
  Profile m_prime;  // aggregates to (0,0,0)
  PreferenceRelation aggregate_m;
  PreferenceRelation aggregate_m_prime;
};

// Two relations are inconsistent when some position holds strict opposites.
inline bool is_inconsistent(const PreferenceRelation& t,
                            const PreferenceRelation& u) {
  if (t.size() != u.size())
    throw DimensionMismatch("relations have differing lengths");
  for (int i = 0; i < t.size(); ++i)
    if (is_strict(t[i]) && u[i] == neg(t[i])) return true;
  return false;
}

// Profiles contradict when every individual's two orders are inconsistent.
inline bool contradicts(const Profile& m, const Profile& m2) {
  if (m.individuals() != m2.individuals())
    throw DimensionMismatch("profiles have differing individual counts");
  for (int i = 0; i < m.individuals(); ++i)
    if (!is_inconsistent(m.column(i), m2.column(i))) return false;
  return true;
}

namespace detail {

inline CycleWitness checked_witness(const IiaSwf& w, const Profile& m,
                                    Provenance p) {
  const PreferenceRelation agg = w.apply(m);
  if (!classify(agg).cycle())
    throw InternalDichotomyError(
        "constructed profile " + m.column_symbols() +
        " unexpectedly aggregates to the weak order " + agg.symbols());
  return CycleWitness{m, agg, p};
}

// Places the three given rows at positions (pos[k] -> rows[k]).
inline Profile place_rows(const std::array<int, 3>& pos,
                          const std::array<PairwisePreferences, 3>& rows) {
  std::array<const PairwisePreferences*, 3> slot{nullptr, nullptr, nullptr};
  for (int k = 0; k < 3; ++k) slot[pos[k]] = &rows[k];
  return Profile::from_rows(*slot[0], *slot[1], *slot[2]);
}

inline void require(const AxiomVerdict& verdict, const std::string& axiom,
                    const std::string& op) {
  if (!verdict.holds)
    throw PreconditionFailed(axiom, op + " requires " + axiom +
                                        ", which does not hold");
}

}  // namespace detail

// If some component maps a strict row to indifference, the two profiles with
// that row, its negation, and a unanimous row are both valid, and at least
// one of them aggregates to a cycle. Returns that witness; nullopt when
// strictness preservation holds. The unanimous-0 variant is preferred when
// both aggregate to cycles.
inline std::optional<CycleWitness> strictness_witness(const IiaSwf& w) {
  detail::require(check_unanimity(w), "unanimity", "strictness witness");

  const int n = w.individuals();
  for (int j = 0; j < 3; ++j) {
    for (const auto& r : enumerate_strict_pairs(n)) {
      if (is_strict(w.component(j)(r))) continue;
      // r sits at row j, the unanimous row follows it cyclically, and the
      // negated row takes the remaining position. The unanimous-0 variant is
      // tried first, so it is the one returned when both cycle.
      const std::array<int, 3> pos{j, (j + 1) % 3, (j + 2) % 3};
      for (Ternary x : {Ternary::Zero, Ternary::One}) {
        const Profile m =
            detail::place_rows(pos, {r, delta(x, n), r.negated()});
        const PreferenceRelation agg = w.apply(m);
        if (classify(agg).cycle()) {
          return CycleWitness{m, agg, Provenance::StrictnessLemma};
        }
      }
      throw InternalDichotomyError(
          "neither unanimous-row variant for the tied strict row " +
          r.symbols() + " aggregates to a cycle");
    }
  }
  return std::nullopt;
}

// If two components agree where strict neutrality demands opposition
// (s_p(x) = s_q(neg x) strict for positions p != q), the profile with x at p,
// neg x at q and the unanimous row elsewhere aggregates to (t,t,t). Returns
// that witness; nullopt when strict neutrality holds.
inline std::optional<CycleWitness> neutrality_witness(const IiaSwf& w) {
  detail::require(check_unanimity(w), "unanimity", "neutrality witness");
  detail::require(check_strictness_preservation(w), "strictness preservation",
                  "neutrality witness");

  const int n = w.individuals();
  for (const auto& x : enumerate_strict_pairs(n)) {
    const PairwisePreferences nx = x.negated();
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        if (p == q) continue;
        const Ternary t = w.component(p)(x);
        if (!is_strict(t) || w.component(q)(nx) != t) continue;
        const int u = 3 - p - q;
        std::array<int, 3> pos{p, q, u};
        const Profile m = detail::place_rows(pos, {x, nx, delta(t, n)});
        return detail::checked_witness(w, m, Provenance::NeutralityLemma);
      }
    }
  }
  return std::nullopt;
}

// Neutrality-violation search over all rows, indifference included: whenever
// s_q(neg r) differs from neg s_p(r), the profile {r at p, neg r at q,
// all-indifferent row at u} is valid; it is returned iff it aggregates to a
// cycle. Unlike pareto_witness this helper does not insist on Pareto
// indifference, so the third entry is evaluated rather than assumed to be e.
inline std::optional<CycleWitness> weak_neutrality_search(const IiaSwf& w) {
  const int n = w.individuals();
  for (const auto& r : enumerate_pairs(n)) {
    const PairwisePreferences nr = r.negated();
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        if (p == q) continue;
        if (w.component(q)(nr) == neg(w.component(p)(r))) continue;
        const int u = 3 - p - q;
        const Profile m =
            detail::place_rows({p, q, u}, {r, nr, delta(Ternary::E, n)});
        const PreferenceRelation agg = w.apply(m);
        if (classify(agg).cycle())
          return CycleWitness{m, agg, Provenance::ParetoNeutrality};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::uint32_t ones_mask(const PairwisePreferences& r) {
  std::uint32_t mask = 0;
  for (int i = 0; i < r.size(); ++i)
    if (r[i] == Ternary::One) mask |= 1u << i;
  return mask;
}

// The strict restriction shared by all components once strict neutrality
// holds, together with the first inclusion-minimal aggregate-1 coalition.
struct MinimalCoalition {
  PairwisePreferences row;    // strict row with s(row) = 1
  std::uint32_t votes;        // bitmask of individuals voting 1 in row
  int votes_size;
};

inline std::optional<MinimalCoalition> minimal_aggregate_one(const IiaSwf& w) {
  std::vector<PairwisePreferences> agg1;
  std::vector<std::uint32_t> masks;
  for (const auto& r : enumerate_strict_pairs(w.individuals())) {
    if (w.component(0)(r) == Ternary::One) {
      agg1.push_back(r);
      masks.push_back(ones_mask(r));
    }
  }
  for (std::size_t a = 0; a < agg1.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < agg1.size() && minimal; ++b) {
      if (b == a) continue;
      // strict subset test on vote sets
      if ((masks[b] & ~masks[a]) == 0 && masks[b] != masks[a]) minimal = false;
    }
    if (minimal) {
      int size = 0;
      for (std::uint32_t m = masks[a]; m; m &= m - 1) ++size;
      return MinimalCoalition{agg1[a], masks[a], size};
    }
  }
  return std::nullopt;
}

// Case-1 row search: a row with individual `i` (0-based) voting `vote` that
// component k aggregates to `target`. Scans components first, rows second.
struct Case1Row {
  int k;
  PairwisePreferences row;
};

inline std::optional<Case1Row> find_case1_row(const IiaSwf& w, int i,
                                              Ternary vote, Ternary target) {
  for (int k = 0; k < 3; ++k) {
    for (const auto& r : enumerate_pairs(w.individuals())) {
      if (r[i] == vote && w.component(k)(r) == target)
        return Case1Row{k, r};
    }
  }
  return std::nullopt;
}

// Case-2 companion rows: r' equals 1 off the coalition and takes both strict
// values inside it; r'' complements r' inside the coalition.
struct Case2Rows {
  PairwisePreferences r_prime;
  PairwisePreferences r_double;
};

inline Case2Rows case2_rows(const MinimalCoalition& mc, int n) {
  // Lexicographically first r': zeros on the coalition except a single one at
  // its last member keeps r' non-constant there.
  std::vector<int> coalition;
  for (int i = 0; i < n; ++i)
    if (mc.votes & (1u << i)) coalition.push_back(i);

  PairwisePreferences r_prime = delta(Ternary::One, n);
  for (std::size_t k = 0; k + 1 < coalition.size(); ++k)
    r_prime = r_prime.with(coalition[k], Ternary::Zero);

  PairwisePreferences r_double = r_prime;
  for (int i : coalition) r_double = r_double.with(i, neg(r_prime[i]));
  return Case2Rows{r_prime, r_double};
}

}  // namespace detail

// Builds a profile aggregating to a preference cycle for any rule satisfying
// unanimity and non-dictatorship. Cascade:
//   1. strictness witness, when a strict row ties;
//   2. strict-neutrality witness, when components disagree or fail oddness
//      on strict rows;
//   3. the minimal-coalition constructions: a singleton coalition is paired
//      with an overruling row (case 1), an intermediate coalition with the
//      complementary pair (case 2);
//   4. neutrality-violation search over weak rows when case 1's overruling
//      row does not exist;
//   5. first cycle-aggregating profile in enumeration order as a last resort.
// Stage 5 cannot come up empty: an earlier stage only falls through when the
// rule demonstrably violates unrestricted domain.
inline CycleWitness arrow_witness(const IiaSwf& w) {
  detail::require(check_unanimity(w), "unanimity", "arrow witness");
  detail::require(check_non_dictatorship(w), "non-dictatorship",
                  "arrow witness");

  if (auto witness = strictness_witness(w)) return *witness;
  if (auto witness = neutrality_witness(w)) return *witness;

  const int n = w.individuals();
  const auto mc = detail::minimal_aggregate_one(w);
  if (!mc)
    throw InternalDichotomyError(
        "no strict row aggregates to 1 despite unanimity");

  if (mc->votes_size == 1) {
    int i = 0;
    while (!(mc->votes & (1u << i))) ++i;
    if (auto found = detail::find_case1_row(w, i, Ternary::Zero, Ternary::One)) {
      const int k = found->k;
      const int j = k == 0 ? 1 : 0;
      const int u = 3 - j - k;
      const Profile m = detail::place_rows(
          {j, k, u}, {mc->row, found->row, delta(Ternary::One, n)});
      return detail::checked_witness(w, m, Provenance::ArrowCase1);
    }
    // The overruling row promised by non-dictatorship need not exist once
    // indifference is allowed; fall through to the weak-row constructions.
  } else if (mc->votes_size < n) {
    const auto rows = detail::case2_rows(*mc, n);
    const Profile m = Profile::from_rows(mc->row, rows.r_prime, rows.r_double);
    return detail::checked_witness(w, m, Provenance::ArrowCase2);
  } else {
    throw InternalDichotomyError(
        "the only minimal aggregate-1 coalition contains every individual");
  }

  if (auto witness = weak_neutrality_search(w)) return *witness;

  if (n > 6) throw TooLarge("fallback cycle search capped at n <= 6");
  const ProfileSpace space(n);
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Profile m = space.at(rank);
    const PreferenceRelation agg = w.apply(m);
    if (classify(agg).cycle())
      return CycleWitness{m, agg, Provenance::ExhaustiveSearch};
  }
  throw InternalDichotomyError(
      "no profile aggregates to a cycle, contradicting the witness cascade");
}

// Builds the contradictory pair: a profile aggregating to (1,1,1) and one
// aggregating to (0,0,0) that contradict each other columnwise. Defined on
// rules where the minimal-coalition stage applies; the overruling rows it
// needs are searched over all rows and their absence is reported explicitly.
inline ContradictoryPair contradictory_pair(const IiaSwf& w) {
  detail::require(check_unanimity(w), "unanimity", "contradictory pair");
  detail::require(check_non_dictatorship(w), "non-dictatorship",
                  "contradictory pair");
  detail::require(check_strictness_preservation(w), "strictness preservation",
                  "contradictory pair");
  detail::require(check_strict_neutrality(w), "strict neutrality",
                  "contradictory pair");

  const int n = w.individuals();
  const auto mc = detail::minimal_aggregate_one(w);
  if (!mc)
    throw InternalDichotomyError(
        "no strict row aggregates to 1 despite unanimity");

  const auto finish = [&](const Profile& m, const Profile& m_prime) {
    const PreferenceRelation am = w.apply(m);
    const PreferenceRelation ap = w.apply(m_prime);
    const PreferenceRelation all_one{Ternary::One, Ternary::One, Ternary::One};
    const PreferenceRelation all_zero = all_one.negated();
    if (am != all_one || ap != all_zero || !contradicts(m, m_prime))
      throw InternalDichotomyError(
          "contradictory-pair construction failed to validate");
    return ContradictoryPair{m, m_prime, am, ap};
  };

  if (mc->votes_size == 1) {
    int i = 0;
    while (!(mc->votes & (1u << i))) ++i;

    // m places the coalition row at j, an overruling row r' at k and the
    // unanimous-1 row at u; m' reuses j for the negated coalition row, which
    // already makes every column pair inconsistent, and needs a row r'' with
    // individual i voting 1 that the component at its position aggregates to
    // 0. Iterating j and the placement of r'' makes every component
    // reachable for either search.
    bool overruling_exists = false;
    for (int k = 0; k < 3; ++k) {
      std::optional<PairwisePreferences> r_prime;
      for (const auto& r : enumerate_pairs(n)) {
        if (r[i] == Ternary::Zero && w.component(k)(r) == Ternary::One) {
          r_prime = r;
          break;
        }
      }
      if (!r_prime) continue;
      overruling_exists = true;

      const int j_first = k == 0 ? 1 : 0;
      for (int j : {j_first, 3 - k - j_first}) {
        const int u = 3 - j - k;
        for (int k2 : {k, u}) {
          std::optional<PairwisePreferences> r_double;
          for (const auto& r : enumerate_pairs(n)) {
            if (r[i] == Ternary::One && w.component(k2)(r) == Ternary::Zero) {
              r_double = r;
              break;
            }
          }
          if (!r_double) continue;
          const Profile m = detail::place_rows(
              {j, k, u}, {mc->row, *r_prime, delta(Ternary::One, n)});
          const int u2 = 3 - j - k2;
          const Profile m_prime = detail::place_rows(
              {j, k2, u2},
              {mc->row.negated(), *r_double, delta(Ternary::Zero, n)});
          return finish(m, m_prime);
        }
      }
    }
    throw InternalDichotomyError(
        overruling_exists
            ? "no row with individual " + std::to_string(i + 1) +
                  " voting 1 aggregates to 0 on any component"
            : "no row with individual " + std::to_string(i + 1) +
                  " voting 0 aggregates to 1 on any component");
  }

  if (mc->votes_size < n) {
    const auto rows = detail::case2_rows(*mc, n);
    const Profile m = Profile::from_rows(mc->row, rows.r_prime, rows.r_double);
    return finish(m, m.negated());
  }

  throw InternalDichotomyError(
      "the only minimal aggregate-1 coalition contains every individual");
}

// Full-neutrality violation witness under Pareto indifference: the proof's
// {r, neg r, all-indifferent} profile. nullopt when full neutrality holds.
inline std::optional<CycleWitness> pareto_witness(const IiaSwf& w) {
  detail::require(check_pareto_indifference(w), "pareto indifference",
                  "pareto witness");
  return weak_neutrality_search(w);
}

}  // namespace arrovian
