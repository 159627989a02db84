#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace arrovian {

// A ternary preference value for one pair of alternatives (x vs y):
//   Zero : x strictly preferred to y
//   One  : y strictly preferred to x
//   E    : indifference between x and y
// The numeric encoding fixes the symbol order 0 < e < 1 used everywhere for
// enumeration, serialization and lexicographic comparison.
enum class Ternary : std::uint8_t { Zero = 0, E = 1, One = 2 };

constexpr bool is_strict(Ternary v) { return v != Ternary::E; }

// Negation: swaps the strict directions and fixes indifference. An involution.
constexpr Ternary neg(Ternary v) {
  return static_cast<Ternary>(2 - static_cast<int>(v));
}

constexpr char to_symbol(Ternary v) {
  constexpr char symbols[3] = {'0', 'e', '1'};
  return symbols[static_cast<int>(v)];
}

constexpr std::optional<Ternary> from_symbol(char c) {
  switch (c) {
    case '0': return Ternary::Zero;
    case 'e': return Ternary::E;
    case '1': return Ternary::One;
    default: return std::nullopt;
  }
}

// The set of distinct ternary values appearing in a tuple, as a 3-bit mask.
class ValueSet {
public:
  constexpr ValueSet() = default;

  constexpr void add(Ternary v) { mask_ |= bit(v); }
  constexpr bool contains(Ternary v) const { return (mask_ & bit(v)) != 0; }

  constexpr int size() const {
    int n = 0;
    for (int b = 0; b < 3; ++b) n += (mask_ >> b) & 1;
    return n;
  }

  constexpr bool empty() const { return mask_ == 0; }

  // {0,1} subset test: the weak-order criterion's second disjunct.
  constexpr bool contains_both_strict() const {
    return contains(Ternary::Zero) && contains(Ternary::One);
  }

  constexpr bool only(Ternary v) const { return mask_ == bit(v); }

  friend constexpr bool operator==(ValueSet a, ValueSet b) = default;

  std::string to_string() const {
    std::string out = "{";
    for (Ternary v : {Ternary::Zero, Ternary::E, Ternary::One}) {
      if (contains(v)) {
        if (out.size() > 1) out += ',';
        out += to_symbol(v);
      }
    }
    out += '}';
    return out;
  }

private:
  static constexpr std::uint8_t bit(Ternary v) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(v));
  }
  std::uint8_t mask_ = 0;
};

}  // namespace arrovian
