#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arrovian/enumerate.hpp"
#include "arrovian/errors.hpp"
#include "arrovian/profile.hpp"
#include "arrovian/tuple.hpp"

namespace arrovian {

// One pairwise comparison function: a total map Pair(N) -> {0,e,1}, stored as
// a dense table indexed by the row's enumeration rank.
class PairwiseComparisonFunction {
public:
  PairwiseComparisonFunction(int n, std::vector<Ternary> table)
      : n_(n), table_(std::move(table)) {
    if (n < 2) throw BadDimension("pairwise comparison functions need n >= 2");
    if (n > 12) throw TooLarge("comparison tables capped at n <= 12");
    if (table_.size() != detail::pow_u64(3, n))
      throw DimensionMismatch("comparison table must have 3^n entries");
  }

  template <class F>
  static PairwiseComparisonFunction tabulate(int n, F&& f) {
    if (n < 2) throw BadDimension("pairwise comparison functions need n >= 2");
    if (n > 12) throw TooLarge("comparison tables capped at n <= 12");
    const std::uint64_t size = detail::pow_u64(3, n);
    std::vector<Ternary> table;
    table.reserve(size);
    for (std::uint64_t r = 0; r < size; ++r)
      table.push_back(f(PairwisePreferences::from_rank(r, n)));
    return PairwiseComparisonFunction(n, std::move(table));
  }

  int individuals() const { return n_; }
  std::uint64_t table_size() const { return table_.size(); }

  Ternary operator()(const PairwisePreferences& r) const {
    if (r.size() != n_)
      throw DimensionMismatch("row has " + std::to_string(r.size()) +
                              " entries, table expects " + std::to_string(n_));
    return table_[r.rank()];
  }

  Ternary at_rank(std::uint64_t rank) const { return table_[rank]; }

  PairwiseComparisonFunction with(const PairwisePreferences& input,
                                  Ternary value) const {
    PairwiseComparisonFunction copy = *this;
    copy.table_[input.rank()] = value;
    return copy;
  }

  friend bool operator==(const PairwiseComparisonFunction&,
                         const PairwiseComparisonFunction&) = default;

private:
  int n_;
  std::vector<Ternary> table_;
};

// A social welfare function in IIA-decomposed form: one comparison function
// per adjacent alternative pair. Builtins use three identical components;
// arbitrary triples are allowed so that non-neutral rules can be expressed.
class IiaSwf {
public:
  IiaSwf(PairwiseComparisonFunction s1, PairwiseComparisonFunction s2,
         PairwiseComparisonFunction s3)
      : components_{std::move(s1), std::move(s2), std::move(s3)} {
    if (components_[0].individuals() != components_[1].individuals() ||
        components_[0].individuals() != components_[2].individuals())
      throw DimensionMismatch("components disagree on the individual count");
  }

  static IiaSwf uniform(const PairwiseComparisonFunction& s) {
    return IiaSwf(s, s, s);
  }

  int individuals() const { return components_[0].individuals(); }

  // 0-based component access (component j aggregates row j).
  const PairwiseComparisonFunction& component(int j) const {
    return components_[j];
  }

  PreferenceRelation apply(const Profile& m) const {
    if (m.individuals() != individuals())
      throw DimensionMismatch("profile has " + std::to_string(m.individuals()) +
                              " individuals, function expects " +
                              std::to_string(individuals()));
    return PreferenceRelation{components_[0](m.row(0)), components_[1](m.row(1)),
                              components_[2](m.row(2))};
  }

  friend bool operator==(const IiaSwf&, const IiaSwf&) = default;

private:
  std::array<PairwiseComparisonFunction, 3> components_;
};

// Majority entry on one row: more strict 0-votes than 1-votes gives 0, more
// 1-votes gives 1, a tie (including all-indifferent) gives e. Indifferent
// voters abstain.
inline Ternary majority_value(const PairwisePreferences& r) {
  int zeros = 0, ones = 0;
  for (int i = 0; i < r.size(); ++i) {
    if (r[i] == Ternary::Zero) ++zeros;
    else if (r[i] == Ternary::One) ++ones;
  }
  if (zeros > ones) return Ternary::Zero;
  if (ones > zeros) return Ternary::One;
  return Ternary::E;
}

inline IiaSwf pairwise_majority(int n) {
  return IiaSwf::uniform(PairwiseComparisonFunction::tabulate(n, majority_value));
}

// Individual i's vote is copied verbatim. i is 1-based.
inline IiaSwf dictator(int i, int n) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("dictator index " + std::to_string(i) +
                          " outside 1.." + std::to_string(n));
  return IiaSwf::uniform(PairwiseComparisonFunction::tabulate(
      n, [i](const PairwisePreferences& r) { return r[i - 1]; }));
}

// First strict vote along `order` wins; all-indifferent along the order
// yields e. `order` must be a permutation of 1..n.
inline IiaSwf hierarchical_dictator(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw IndexOutOfRange("hierarchy must list every individual exactly once");
  std::vector<bool> seen(n, false);
  for (int i : order) {
    if (i < 1 || i > n)
      throw IndexOutOfRange("hierarchy index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n));
    if (seen[i - 1])
      throw IndexOutOfRange("hierarchy repeats individual " + std::to_string(i));
    seen[i - 1] = true;
  }
  return IiaSwf::uniform(PairwiseComparisonFunction::tabulate(
      n, [&order](const PairwisePreferences& r) {
        for (int i : order)
          if (is_strict(r[i - 1])) return r[i - 1];
        return Ternary::E;
      }));
}

// Ignores the profile entirely; component j always returns p[j].
inline IiaSwf constant_swf(const PreferenceRelation& p, int n) {
  if (p.size() != 3)
    throw UnsupportedAlternativeCount("constant rule needs a 3-entry relation");
  return IiaSwf(
      PairwiseComparisonFunction::tabulate(n, [&](const PairwisePreferences&) { return p[0]; }),
      PairwiseComparisonFunction::tabulate(n, [&](const PairwisePreferences&) { return p[1]; }),
      PairwiseComparisonFunction::tabulate(n, [&](const PairwisePreferences&) { return p[2]; }));
}

inline IiaSwf indifference_swf(int n) {
  return constant_swf(PreferenceRelation{Ternary::E, Ternary::E, Ternary::E}, n);
}

// A fully tabulated social welfare function over all 13^n profiles. Exists
// only for tiny n; its purpose is expressing rules that are not IIA.
class GeneralSwf {
public:
  GeneralSwf(int n, std::vector<PreferenceRelation> table)
      : n_(n), table_(std::move(table)) {
    check_n(n);
    if (table_.size() != detail::pow_u64(13, n))
      throw DimensionMismatch("general table must have 13^n entries");
  }

  template <class F>
  static GeneralSwf tabulate_fn(int n, F&& f) {
    check_n(n);
    ProfileSpace space(n);
    std::vector<PreferenceRelation> table;
    table.reserve(space.size());
    for (std::uint64_t r = 0; r < space.size(); ++r)
      table.push_back(f(space.at(r)));
    return GeneralSwf(n, std::move(table));
  }

  static GeneralSwf tabulate(const IiaSwf& w) {
    return tabulate_fn(w.individuals(),
                       [&](const Profile& m) { return w.apply(m); });
  }

  int individuals() const { return n_; }

  PreferenceRelation apply(const Profile& m) const {
    if (m.individuals() != n_)
      throw DimensionMismatch("profile individual count mismatch");
    return table_[ProfileSpace(n_).rank_of(m)];
  }

  PreferenceRelation at_rank(std::uint64_t rank) const { return table_[rank]; }

private:
  static void check_n(int n) {
    if (n < 2) throw BadDimension("general tables need n >= 2");
    if (n > 4) throw TooLarge("general tables capped at n <= 4 (13^n entries)");
  }

  int n_;
  std::vector<PreferenceRelation> table_;
};

// Witness that a general rule is not IIA: two profiles that agree on row
// `row` (0-based) yet aggregate that row's pair differently.
struct NotIia {
  Profile first;
  Profile second;
  int row;
};

// Recovers the componentwise form when each output entry depends only on the
// matching row; otherwise returns the first witness pair in scan order.
inline std::variant<IiaSwf, NotIia> decompose_iia(const GeneralSwf& g) {
  const int n = g.individuals();
  const ProfileSpace space(n);
  const std::uint64_t pair_count = detail::pow_u64(3, n);

  std::array<std::vector<Ternary>, 3> tables;
  std::array<std::vector<std::int64_t>, 3> first_seen;
  for (int j = 0; j < 3; ++j) {
    tables[j].assign(pair_count, Ternary::E);
    first_seen[j].assign(pair_count, -1);
  }

  for (int j = 0; j < 3; ++j) {
    for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
      const Profile m = space.at(rank);
      const std::uint64_t row_rank = m.row(j).rank();
      const Ternary out = g.at_rank(rank)[j];
      if (first_seen[j][row_rank] < 0) {
        first_seen[j][row_rank] = static_cast<std::int64_t>(rank);
        tables[j][row_rank] = out;
      } else if (tables[j][row_rank] != out) {
        return NotIia{space.at(static_cast<std::uint64_t>(first_seen[j][row_rank])),
                      m, j};
      }
    }
  }

  return IiaSwf(PairwiseComparisonFunction(n, std::move(tables[0])),
                PairwiseComparisonFunction(n, std::move(tables[1])),
                PairwiseComparisonFunction(n, std::move(tables[2])));
}

// Borda count extended to ties: an alternative scores 2 per strict win and 1
// per tie, summed over individuals; pairs aggregate by comparing totals.
// Not IIA; kept as the canonical negative fixture for decompose_iia.
inline GeneralSwf borda_swf(int n) {
  return GeneralSwf::tabulate_fn(n, [](const Profile& m) {
    std::array<int, 3> score{0, 0, 0};
    for (int i = 0; i < m.individuals(); ++i) {
      const PreferenceRelation c = m.column(i);
      for (int j = 0; j < 3; ++j) {
        const int k = (j + 1) % 3;
        // entry j relates a_{j+1} and a_{k+1}
        if (c[j] == Ternary::Zero) score[j] += 2;
        else if (c[j] == Ternary::One) score[k] += 2;
        else { score[j] += 1; score[k] += 1; }
      }
    }
    std::array<Ternary, 3> out{};
    for (int j = 0; j < 3; ++j) {
      const int k = (j + 1) % 3;
      out[j] = score[j] > score[k] ? Ternary::Zero
               : score[j] < score[k] ? Ternary::One
                                     : Ternary::E;
    }
    return PreferenceRelation{out[0], out[1], out[2]};
  });
}

}  // namespace arrovian
