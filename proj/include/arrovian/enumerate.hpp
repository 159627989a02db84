#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "arrovian/errors.hpp"
#include "arrovian/profile.hpp"
#include "arrovian/relation.hpp"

namespace arrovian {

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

// All 27 ternary triples in lexicographic order (0 < e < 1).
inline std::vector<PreferenceRelation> enumerate_relations(int a = 3) {
  if (a != 3)
    throw UnsupportedAlternativeCount(
        "relation enumeration is defined for 3 alternatives");
  std::vector<PreferenceRelation> out;
  out.reserve(27);
  for (std::uint64_t r = 0; r < 27; ++r)
    out.push_back(PreferenceRelation::from_rank(r, 3));
  return out;
}

// The 13 weak orders on 3 alternatives, in enumeration order. Cached.
inline const std::vector<PreferenceRelation>& weak_orders3() {
  static const std::vector<PreferenceRelation> table = [] {
    std::vector<PreferenceRelation> out;
    for (const auto& t : enumerate_relations())
      if (classify(t).weak_order()) out.push_back(t);
    return out;
  }();
  return table;
}

// The 6 strict orders on 3 alternatives, in enumeration order. Cached.
inline const std::vector<PreferenceRelation>& strict_orders3() {
  static const std::vector<PreferenceRelation> table = [] {
    std::vector<PreferenceRelation> out;
    for (const auto& t : weak_orders3())
      if (t.strict()) out.push_back(t);
    return out;
  }();
  return table;
}

inline std::vector<PreferenceRelation> enumerate_weak_orders(int a = 3) {
  if (a != 3)
    throw UnsupportedAlternativeCount(
        "weak-order enumeration is defined for 3 alternatives");
  return weak_orders3();
}

// Index of a weak order within weak_orders3(), or -1 for cycles.
inline int weak_order_index(const PreferenceRelation& t) {
  static const std::array<int, 27> inverse = [] {
    std::array<int, 27> inv{};
    inv.fill(-1);
    const auto& table = weak_orders3();
    for (int k = 0; k < static_cast<int>(table.size()); ++k)
      inv[table[k].rank()] = k;
    return inv;
  }();
  return t.size() == 3 ? inverse[t.rank()] : -1;
}

// All 3^n rows over n individuals, lexicographic.
inline std::vector<PairwisePreferences> enumerate_pairs(int n) {
  if (n < 2) throw BadDimension("pair enumeration needs n >= 2");
  if (n > 12) throw TooLarge("pair enumeration capped at n <= 12");
  std::vector<PairwisePreferences> out;
  out.reserve(detail::pow_u64(3, n));
  for (std::uint64_t r = 0; r < detail::pow_u64(3, n); ++r)
    out.push_back(PairwisePreferences::from_rank(r, n));
  return out;
}

// All 2^n strict rows, lexicographic.
inline std::vector<PairwisePreferences> enumerate_strict_pairs(int n) {
  if (n < 2) throw BadDimension("pair enumeration needs n >= 2");
  if (n > 12) throw TooLarge("pair enumeration capped at n <= 12");
  std::vector<PairwisePreferences> out;
  out.reserve(detail::pow_u64(2, n));
  for (std::uint64_t mask = 0; mask < detail::pow_u64(2, n); ++mask) {
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
      const bool one = (mask >> (n - 1 - i)) & 1;
      rank = rank * 3 + (one ? 2 : 0);
    }
    out.push_back(PairwisePreferences::from_rank(rank, n));
  }
  return out;
}

// Lazy view of all 13^n profiles on n individuals, ordered lexicographically
// by the column tuple (column 1 most significant, each column keyed by its
// weak-order index).
class ProfileSpace {
public:
  explicit ProfileSpace(int n) : n_(n) {
    if (n < 2) throw BadDimension("profile enumeration needs n >= 2");
    if (n > 8) throw TooLarge("profile space capped at n <= 8");
    size_ = detail::pow_u64(13, n);
  }

  int individuals() const { return n_; }
  std::uint64_t size() const { return size_; }

  Profile at(std::uint64_t rank) const {
    const auto& orders = weak_orders3();
    std::vector<PreferenceRelation> cols;
    cols.reserve(n_);
    std::uint64_t r = rank;
    std::uint64_t place = size_ / 13;
    for (int i = 0; i < n_; ++i) {
      cols.push_back(orders[r / place]);
      r %= place;
      place /= 13;
    }
    return Profile::from_columns(cols);
  }

  // Inverse of at().
  std::uint64_t rank_of(const Profile& m) const {
    std::uint64_t r = 0;
    for (int i = 0; i < m.individuals(); ++i)
      r = r * 13 + static_cast<std::uint64_t>(weak_order_index(m.column(i)));
    return r;
  }

private:
  int n_;
  std::uint64_t size_;
};

// Materialized profile enumeration; guarded because 13^n grows quickly.
inline std::vector<Profile> enumerate_profiles(int n, int a = 3) {
  if (a != 3)
    throw UnsupportedAlternativeCount(
        "profile enumeration is defined for 3 alternatives");
  if (n > 4) throw TooLarge("materialized profile enumeration capped at n <= 4");
  ProfileSpace space(n);
  std::vector<Profile> out;
  out.reserve(space.size());
  for (std::uint64_t r = 0; r < space.size(); ++r) out.push_back(space.at(r));
  return out;
}

}  // namespace arrovian
