#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "arrovian/errors.hpp"
#include "arrovian/ternary.hpp"

namespace arrovian {

namespace detail {

struct relation_tag {
  static constexpr int min_size = 3;  // at least 3 alternatives
  static constexpr const char* kind = "preference relation";
};

struct pair_tag {
  static constexpr int min_size = 2;  // at least 2 individuals
  static constexpr const char* kind = "pairwise preferences";
};

}  // namespace detail

// Immutable ternary tuple, packed 2 bits per entry into one machine word.
// Entry i occupies bits [2i, 2i+1]; lane values are the Ternary encoding.
// Capacity is 31 entries, far above the exhaustive-search sizes used here.
template <class Tag>
class TernaryTuple {
public:
  static constexpr int min_size = Tag::min_size;
  static constexpr int max_size = 31;

  TernaryTuple(std::initializer_list<Ternary> entries) {
    check_size(static_cast<int>(entries.size()));
    int i = 0;
    for (Ternary v : entries) set_lane(i++, v);
    size_ = static_cast<std::uint8_t>(entries.size());
  }

  explicit TernaryTuple(std::span<const Ternary> entries) {
    check_size(static_cast<int>(entries.size()));
    for (int i = 0; i < static_cast<int>(entries.size()); ++i)
      set_lane(i, entries[i]);
    size_ = static_cast<std::uint8_t>(entries.size());
  }

  // Constant tuple (x, x, ..., x).
  static TernaryTuple filled(Ternary v, int size) {
    check_size(size);
    TernaryTuple t;
    for (int i = 0; i < size; ++i) t.set_lane(i, v);
    t.size_ = static_cast<std::uint8_t>(size);
    return t;
  }

  // Inverse of rank(): big-endian base-3 decoding, entry 0 most significant.
  static TernaryTuple from_rank(std::uint64_t rank, int size) {
    check_size(size);
    TernaryTuple t;
    t.size_ = static_cast<std::uint8_t>(size);
    for (int i = size - 1; i >= 0; --i) {
      t.set_lane(i, static_cast<Ternary>(rank % 3));
      rank /= 3;
    }
    return t;
  }

  // Parses a compact literal like "0e1".
  static TernaryTuple from_symbols(std::string_view text) {
    check_size(static_cast<int>(text.size()));
    TernaryTuple t;
    for (int i = 0; i < static_cast<int>(text.size()); ++i) {
      auto v = from_symbol(text[i]);
      if (!v) {
        throw ParseError(std::string("invalid symbol '") + text[i] +
                             "' in " + Tag::kind + " literal \"" +
                             std::string(text) + "\"",
                         0, i + 1);
      }
      t.set_lane(i, *v);
    }
    t.size_ = static_cast<std::uint8_t>(text.size());
    return t;
  }

  int size() const { return size_; }

  // 0-based entry access.
  Ternary operator[](int i) const {
    return static_cast<Ternary>((bits_ >> (2 * i)) & 0b11u);
  }

  // Position of the tuple in lexicographic enumeration order (0 < e < 1),
  // i.e. big-endian base-3 value of the entries.
  std::uint64_t rank() const {
    std::uint64_t r = 0;
    for (int i = 0; i < size_; ++i)
      r = r * 3 + static_cast<std::uint64_t>((*this)[i]);
    return r;
  }

  // Entrywise negation. Lanes hold values <= 2, so the word-wide subtraction
  // below cannot borrow across lanes.
  TernaryTuple negated() const {
    TernaryTuple t;
    t.size_ = size_;
    std::uint64_t twos = 0;
    for (int i = 0; i < size_; ++i) twos |= std::uint64_t{2} << (2 * i);
    t.bits_ = twos - bits_;
    return t;
  }

  ValueSet vals() const {
    ValueSet s;
    for (int i = 0; i < size_; ++i) s.add((*this)[i]);
    return s;
  }

  // True when no entry is indifferent.
  bool strict() const { return !vals().contains(Ternary::E); }

  TernaryTuple with(int i, Ternary v) const {
    TernaryTuple t = *this;
    t.bits_ &= ~(std::uint64_t{0b11} << (2 * i));
    t.bits_ |= static_cast<std::uint64_t>(v) << (2 * i);
    return t;
  }

  std::string symbols() const {
    std::string out;
    out.reserve(size_);
    for (int i = 0; i < size_; ++i) out += to_symbol((*this)[i]);
    return out;
  }

  friend bool operator==(const TernaryTuple&, const TernaryTuple&) = default;

  // Lexicographic over entries with 0 < e < 1; shorter tuples sort first.
  friend std::strong_ordering operator<=>(const TernaryTuple& a,
                                          const TernaryTuple& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return a.rank() <=> b.rank();
  }

private:
  TernaryTuple() = default;

  static void check_size(int size) {
    if (size < Tag::min_size) {
      throw BadDimension(std::string(Tag::kind) + " needs at least " +
                         std::to_string(Tag::min_size) + " entries, got " +
                         std::to_string(size));
    }
    if (size > max_size) {
      throw BadDimension(std::string(Tag::kind) + " exceeds packed capacity (" +
                         std::to_string(size) + " > " +
                         std::to_string(max_size) + ")");
    }
  }

  void set_lane(int i, Ternary v) {
    bits_ |= static_cast<std::uint64_t>(v) << (2 * i);
  }

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

// A-tuple over the cyclically adjacent alternative pairs: entry i encodes
// a_{i+1} vs a_{s(i+1)} with s the cyclic successor (1-based as rendered).
using PreferenceRelation = TernaryTuple<detail::relation_tag>;

// N-tuple of one pair's votes across individuals: entry i is individual
// i+1's value on that pair.
using PairwisePreferences = TernaryTuple<detail::pair_tag>;

// The constant row (x, ..., x) over n individuals.
inline PairwisePreferences delta(Ternary x, int n) {
  return PairwisePreferences::filled(x, n);
}

}  // namespace arrovian
