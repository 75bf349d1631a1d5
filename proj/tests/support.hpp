#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "wicks/word.hpp"

namespace wicks::test {

inline Word C(std::string_view text) { return parse_word(text, SymbolKind::constant); }
inline Word V(std::string_view text) { return parse_word(text, SymbolKind::variable); }
inline Symbol cs(const char* name) { return Symbol::constant(name); }
inline Symbol vs(const char* name) { return Symbol::variable(name); }
inline Word single(const Symbol& s, int sign = 1) { return Word(Letter{s, sign}); }

using Rng = std::mt19937_64;

inline std::vector<Symbol> alphabet(std::size_t n, SymbolKind kind = SymbolKind::constant) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)), kind);
  return out;
}

// A freely reduced word with exactly `length` letters.
inline Word random_word(Rng& rng, const std::vector<Symbol>& alpha, std::size_t length) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter l{alpha[rng() % alpha.size()], rng() % 2 ? 1 : -1};
    if (!letters.empty() && letters.back().symbol == l.symbol && letters.back().sign == -l.sign) continue;
    letters.push_back(l);
  }
  return Word(std::span<const Letter>(letters));
}

// Raw letter sequence, possibly unreduced.
inline std::vector<Letter> random_letters(Rng& rng, const std::vector<Symbol>& alpha, std::size_t length) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(Letter{alpha[rng() % alpha.size()], rng() % 2 ? 1 : -1});
  return letters;
}

// A random quadratic letter sequence on k variables w1..wk (not necessarily
// freely or cyclically reduced).
inline std::vector<Letter> random_quadratic(Rng& rng, int k, bool force_orientable = false) {
  std::vector<Letter> letters;
  for (int v = 1; v <= k; ++v) {
    const Symbol s = Symbol::variable("w" + std::to_string(v));
    const int first = rng() % 2 ? 1 : -1;
    letters.push_back(Letter{s, first});
    letters.push_back(Letter{s, force_orientable ? -first : (rng() % 2 ? 1 : -1)});
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return letters;
}

inline bool raw_is_reduced(const std::vector<Letter>& l, bool cyclic) {
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (l[i].symbol == l[i + 1].symbol && l[i].sign == -l[i + 1].sign) return false;
  }
  if (cyclic && l.size() > 1 && l.front().symbol == l.back().symbol && l.front().sign == -l.back().sign) return false;
  return true;
}

// Every cyclically reduced quadratic word of length <= max_length over w1, w2,
// ...: variable sequences in first-occurrence order with all sign patterns, or
// with only the second occurrence of each variable signed when
// `up_to_inversion` is set.
template <class F>
inline void for_each_quadratic(int max_length, F f, bool up_to_inversion = false) {
  for (int n = 2; n <= max_length; n += 2) {
    std::vector<int> var(n, -1);
    std::function<void(int, int)> place = [&](int pos, int next) {
      if (pos == n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
          std::vector<Letter> l;
          bool skip = false;
          std::vector<bool> seen(n / 2, false);
          for (int i = 0; i < n; ++i) {
            const bool negative = (mask >> i) & 1;
            if (up_to_inversion && !seen[var[i]] && negative) skip = true;
            seen[var[i]] = true;
            l.push_back(Letter{Symbol::variable("w" + std::to_string(var[i] + 1)), negative ? -1 : 1});
          }
          if (skip) continue;
          if (raw_is_reduced(l, true)) f(Word(std::span<const Letter>(l)));
        }
        return;
      }
      if (var[pos] >= 0) return place(pos + 1, next);
      var[pos] = next;
      for (int j = pos + 1; j < n; ++j) {
        if (var[j] >= 0) continue;
        var[j] = next;
        place(pos + 1, next + 1);
        var[j] = -1;
      }
      var[pos] = -1;
    };
    place(0, 0);
  }
}

}  // namespace wicks::test
