#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/errors.hpp"
#include "arrovian/tuple.hpp"

namespace arrovian {

enum class OrderKind { WeakOrder, Cycle };

// Verdict of the weak-order criterion plus the strictness flag.
struct Classification {
  OrderKind kind;
  bool strict;  // no indifference entry anywhere

  bool weak_order() const { return kind == OrderKind::WeakOrder; }
  bool cycle() const { return kind == OrderKind::Cycle; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline ValueSet vals(const PreferenceRelation& t) { return t.vals(); }

// Weak order iff the entries are all indifferent or both strict directions
// occur; otherwise the tuple closes into a preference cycle.
inline Classification classify(const PreferenceRelation& t) {
  const ValueSet v = t.vals();
  const bool weak = v.only(Ternary::E) || v.contains_both_strict();
  return Classification{weak ? OrderKind::WeakOrder : OrderKind::Cycle,
                        !v.contains(Ternary::E)};
}

namespace detail {

// Union-find over alternative indices; groups alternatives tied by '~'.
class TieClasses {
public:
  explicit TieClasses(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

}  // namespace detail

// Renders a weak order as a chain "a1 ~ a2 < a3" over all alternatives,
// tied groups listed in index order. Cycles render in the cyclic form with
// the first alternative repeated, one symbol per entry, e.g.
// "a1 < a2 < a3 ~ a1"; descending strict links use '>'.
inline std::string render_chain(const PreferenceRelation& t) {
  const int a = t.size();
  if (classify(t).cycle()) {
    std::string out = "a1";
    for (int i = 0; i < a; ++i) {
      const char op = t[i] == Ternary::E ? '~' : (t[i] == Ternary::Zero ? '<' : '>');
      out += ' ';
      out += op;
      out += " a" + std::to_string((i + 1) % a + 1);
    }
    return out;
  }

  // Weak order: derive levels from the cyclic-adjacent constraints. Ties are
  // merged first; strict links then orient edges between tie classes. The
  // weak-order criterion guarantees this graph is acyclic, so longest-path
  // levels exist.
  detail::TieClasses ties(a);
  for (int i = 0; i < a; ++i)
    if (t[i] == Ternary::E) ties.unite(i, (i + 1) % a);

  std::vector<int> level(a, 0);
  // Relax strict edges to a fixed point (at most `a` sweeps on a cycle graph).
  for (int sweep = 0; sweep < a + 1; ++sweep) {
    bool changed = false;
    for (int i = 0; i < a; ++i) {
      if (t[i] == Ternary::E) continue;
      // entry i: Zero means a_i preferred to a_s(i) -> a_i earlier (lower level)
      int from = ties.find(t[i] == Ternary::Zero ? i : (i + 1) % a);
      int to = ties.find(t[i] == Ternary::Zero ? (i + 1) % a : i);
      if (level[to] < level[from] + 1) {
        level[to] = level[from] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<int> order(a);
  for (int i = 0; i < a; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const int lx = level[ties.find(x)], ly = level[ties.find(y)];
    return lx != ly ? lx < ly : x < y;
  });

  std::string out = "a" + std::to_string(order[0] + 1);
  for (int k = 1; k < a; ++k) {
    const bool tied = level[ties.find(order[k])] == level[ties.find(order[k - 1])];
    out += tied ? " ~ a" : " < a";
    out += std::to_string(order[k] + 1);
  }
  return out;
}

namespace detail {

struct ChainToken {
  enum Kind { Alt, Less, Greater, Tie } kind;
  int index = 0;   // 0-based alternative index, for Alt
  int column = 0;  // 1-based position in the input
};

inline std::vector<ChainToken> tokenize_chain(std::string_view text) {
  std::vector<ChainToken> tokens;
  int i = 0;
  const int n = static_cast<int>(text.size());
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const int col = i + 1;
    const char c = text[i];
    if (c == '<') {
      tokens.push_back({ChainToken::Less, 0, col});
      ++i;
    } else if (c == '>') {
      tokens.push_back({ChainToken::Greater, 0, col});
      ++i;
    } else if (c == '~') {
      tokens.push_back({ChainToken::Tie, 0, col});
      ++i;
    } else if (c == 'a') {
      int j = i + 1;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i + 1)
        throw ParseError("expected alternative index after 'a'", 0, col);
      const int idx = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      if (idx < 1) throw ParseError("alternative indices are 1-based", 0, col);
      tokens.push_back({ChainToken::Alt, idx - 1, col});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in chain",
                       0, col);
    }
  }
  return tokens;
}

}  // namespace detail

// Parses a chain produced by render_chain (or any equivalent ASCII chain over
// '<', '>' and '~'). A chain visiting every alternative once yields the weak
// order it denotes; a chain whose last alternative repeats the first is read
// as a preference cycle and must follow the cyclic successor order.
inline PreferenceRelation parse_relation(std::string_view text) {
  using detail::ChainToken;
  const auto tokens = detail::tokenize_chain(text);
  if (tokens.empty()) throw ParseError("empty chain", 0, 1);

  std::vector<int> alts;
  std::vector<ChainToken::Kind> ops;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (k % 2 == 0) {
      if (tokens[k].kind != ChainToken::Alt)
        throw ParseError("expected alternative name", 0, tokens[k].column);
      alts.push_back(tokens[k].index);
    } else {
      if (tokens[k].kind == ChainToken::Alt)
        throw ParseError("expected '<', '>' or '~'", 0, tokens[k].column);
      ops.push_back(tokens[k].kind);
    }
  }
  if (tokens.size() % 2 == 0)
    throw ParseError("chain ends with a dangling operator", 0,
                     tokens.back().column);

  const bool cyclic = alts.size() >= 2 && alts.front() == alts.back();
  const int a = static_cast<int>(alts.size()) - (cyclic ? 1 : 0);
  if (a < PreferenceRelation::min_size)
    throw ParseError("chain names fewer than 3 alternatives", 0, 1);

  std::vector<bool> seen(a, false);
  for (int k = 0; k < a; ++k) {
    if (alts[k] >= a)
      throw ParseError("alternative a" + std::to_string(alts[k] + 1) +
                           " out of range for " + std::to_string(a) +
                           " alternatives",
                       0, 1);
    if (seen[alts[k]])
      throw ParseError("alternative a" + std::to_string(alts[k] + 1) +
                           " repeated",
                       0, 1);
    seen[alts[k]] = true;
  }

  if (cyclic) {
    // Each link constrains one cyclically adjacent pair directly.
    std::vector<Ternary> entries(a, Ternary::E);
    for (int k = 0; k < a; ++k) {
      const int x = alts[k];
      const int y = alts[k + 1];
      if (y != (x + 1) % a)
        throw ParseError("cyclic chain must follow successor order", 0, 1);
      entries[x] = ops[k] == ChainToken::Tie
                       ? Ternary::E
                       : (ops[k] == ChainToken::Less ? Ternary::Zero : Ternary::One);
    }
    return PreferenceRelation(std::span<const Ternary>(entries));
  }

  // Linear chain: assign levels left to right, then read off each adjacent
  // pair. '<' descends in preference, '>' ascends, '~' keeps the level.
  std::vector<int> level(a, 0);
  int current = 0;
  level[alts[0]] = 0;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k] == ChainToken::Less) ++current;
    else if (ops[k] == ChainToken::Greater) --current;
    level[alts[k + 1]] = current;
  }

  std::vector<Ternary> entries(a);
  for (int i = 0; i < a; ++i) {
    const int j = (i + 1) % a;
    entries[i] = level[i] == level[j]
                     ? Ternary::E
                     : (level[i] < level[j] ? Ternary::Zero : Ternary::One);
  }
  return PreferenceRelation(std::span<const Ternary>(entries));
}

}  // namespace arrovian
