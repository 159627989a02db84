#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrovian/errors.hpp"
#include "arrovian/relation.hpp"
#include "arrovian/tuple.hpp"

namespace arrovian {

// A 3 x N ternary matrix whose columns are all weak orders. Row j holds every
// individual's value on the adjacent pair a_{j+1} vs a_{s(j+1)}; column i is
// individual i+1's preference relation. Construction validates every column,
// so a Profile value is a profile by construction.
class Profile {
public:
  static constexpr int alternatives = 3;

  static Profile from_rows(const PairwisePreferences& r1,
                           const PairwisePreferences& r2,
                           const PairwisePreferences& r3) {
    if (r1.size() != r2.size() || r1.size() != r3.size())
      throw DimensionMismatch("profile rows have differing lengths");
    Profile m;
    m.rows_ = {r1, r2, r3};
    m.validate_columns();
    return m;
  }

  static Profile from_rows(std::span<const PairwisePreferences> rows) {
    if (rows.size() != alternatives)
      throw UnsupportedAlternativeCount(
          "profiles are defined on exactly 3 alternatives, got " +
          std::to_string(rows.size()) + " rows");
    return from_rows(rows[0], rows[1], rows[2]);
  }

  static Profile from_columns(std::span<const PreferenceRelation> cols) {
    const int n = static_cast<int>(cols.size());
    if (n < 2)
      throw BadDimension("profiles need at least 2 individuals, got " +
                         std::to_string(n));
    if (n > PairwisePreferences::max_size)
      throw BadDimension("individual count exceeds packed capacity");
    for (int i = 0; i < n; ++i) {
      if (cols[i].size() != cols[0].size())
        throw DimensionMismatch("profile columns have differing lengths");
    }
    if (cols[0].size() != alternatives)
      throw UnsupportedAlternativeCount(
          "profiles are defined on exactly 3 alternatives, got columns of "
          "length " +
          std::to_string(cols[0].size()));

    Profile m;
    std::vector<Ternary> row(n);
    for (int j = 0; j < alternatives; ++j) {
      for (int i = 0; i < n; ++i) row[i] = cols[i][j];
      m.rows_[j] = PairwisePreferences(std::span<const Ternary>(row));
    }
    m.validate_columns();
    return m;
  }

  static Profile from_columns(std::initializer_list<PreferenceRelation> cols) {
    return from_columns(std::span<const PreferenceRelation>(cols.begin(), cols.size()));
  }

  int individuals() const { return rows_[0].size(); }

  // 0-based accessors.
  const PairwisePreferences& row(int j) const { return rows_[j]; }
  const std::array<PairwisePreferences, 3>& rows() const { return rows_; }

  PreferenceRelation column(int i) const {
    return PreferenceRelation{rows_[0][i], rows_[1][i], rows_[2][i]};
  }

  std::vector<PreferenceRelation> columns() const {
    std::vector<PreferenceRelation> cols;
    cols.reserve(individuals());
    for (int i = 0; i < individuals(); ++i) cols.push_back(column(i));
    return cols;
  }

  // Entrywise negation. Columns of the result are again weak orders because
  // the weak-order criterion is closed under swapping the strict directions;
  // the constructor re-checks this all the same.
  Profile negated() const {
    return from_rows(rows_[0].negated(), rows_[1].negated(), rows_[2].negated());
  }

  friend bool operator==(const Profile&, const Profile&) = default;

  // Compact one-line form "001,100,010" (columns joined by commas).
  std::string column_symbols() const {
    std::string out;
    for (int i = 0; i < individuals(); ++i) {
      if (i) out += ',';
      out += column(i).symbols();
    }
    return out;
  }

private:
  Profile() : rows_{PairwisePreferences{Ternary::E, Ternary::E},
                    PairwisePreferences{Ternary::E, Ternary::E},
                    PairwisePreferences{Ternary::E, Ternary::E}} {}

  void validate_columns() const {
    for (int i = 0; i < individuals(); ++i) {
      if (classify(column(i)).cycle())
        throw CycleColumn(i + 1, "column " + std::to_string(i + 1) +
                                     " (" + column(i).symbols() +
                                     ") is a preference cycle");
    }
  }

  std::array<PairwisePreferences, 3> rows_;
};

// The six row arrangements of {r, neg r, q} for strict r. Every column of
// every arrangement contains both strict directions, so all six validate.
inline std::array<Profile, 6> opposite_row_profiles(const PairwisePreferences& r,
                                                    const PairwisePreferences& q) {
  if (!r.strict())
    throw NonStrictRow("opposite-row construction needs a strict row, got " +
                       r.symbols());
  if (r.size() != q.size())
    throw DimensionMismatch("rows have differing lengths");
  const PairwisePreferences nr = r.negated();
  return {Profile::from_rows(r, nr, q), Profile::from_rows(r, q, nr),
          Profile::from_rows(q, r, nr), Profile::from_rows(nr, r, q),
          Profile::from_rows(nr, q, r), Profile::from_rows(q, nr, r)};
}

// The six row arrangements of {r, neg r, delta e} for arbitrary r. Columns
// are (u, neg u, e) shuffles: all-indifferent when u = e, otherwise both
// strict directions occur.
inline std::array<Profile, 6> weak_opposite_profiles(const PairwisePreferences& r) {
  const PairwisePreferences nr = r.negated();
  const PairwisePreferences de = delta(Ternary::E, r.size());
  return {Profile::from_rows(r, nr, de), Profile::from_rows(r, de, nr),
          Profile::from_rows(de, r, nr), Profile::from_rows(nr, r, de),
          Profile::from_rows(nr, de, r), Profile::from_rows(de, nr, r)};
}

}  // namespace arrovian
