#pragma once

// Free-group words over two disjoint alphabets: constants (generators of the
// target group H) and variables (generators of the equation group F).

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wicks {

enum class SymbolKind : unsigned char { constant = 0, variable = 1 };

class Symbol {
 public:
  Symbol() = default;
  // Throws MalformedInput unless name matches [A-Za-z][A-Za-z0-9_]*.
  Symbol(std::string name, SymbolKind kind);

  static Symbol constant(std::string name) { return {std::move(name), SymbolKind::constant}; }
  static Symbol variable(std::string name) { return {std::move(name), SymbolKind::variable}; }

  const std::string& name() const noexcept { return name_; }
  SymbolKind kind() const noexcept { return kind_; }
  bool is_constant() const noexcept { return kind_ == SymbolKind::constant; }
  bool is_variable() const noexcept { return kind_ == SymbolKind::variable; }

  // Constants before variables, then by name.
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.name_.compare(b.name_) <=> 0;
  }
  friend bool operator==(const Symbol& a, const Symbol& b) noexcept {
    return a.kind_ == b.kind_ && a.name_ == b.name_;
  }

 private:
  std::string name_;
  SymbolKind kind_ = SymbolKind::constant;
};

bool is_valid_identifier(std::string_view name) noexcept;

struct Letter {
  Symbol symbol;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -sign}; }
  bool is_inverse_of(const Letter& other) const noexcept {
    return sign == -other.sign && symbol == other.symbol;
  }

  // Symbol order, then +1 before -1.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) noexcept {
    if (auto c = a.symbol <=> b.symbol; c != 0) return c;
    return b.sign <=> a.sign;
  }
  friend bool operator==(const Letter& a, const Letter& b) noexcept = default;
};

// A freely reduced word. Every constructor reduces its input.
class Word {
 public:
  Word() = default;
  explicit Word(Letter letter) : letters_{std::move(letter)} {}
  // Freely reduces `letters`.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const;
  // Integer power; negative powers invert.
  Word pow(long k) const;
  // Letters [pos, pos+len) without reduction (a subword of a reduced word is reduced).
  Word subword(std::size_t pos, std::size_t len) const;
  // Letters starting at pos, read cyclically, len letters. Requires the word to be
  // cyclically reduced for the result to be reduced.
  Word cyclic_subword(std::size_t pos, std::size_t len) const;
  // Rotation starting at letter `pos`.
  Word rotate(std::size_t pos) const;
  bool is_cyclically_reduced() const noexcept;

  std::set<Symbol> symbols() const;
  // Number of occurrences of `s` with either sign.
  std::size_t occurrences(const Symbol& s) const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other);

  friend bool operator==(const Word& a, const Word& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  struct Unchecked {};
  Word(std::vector<Letter> letters, Unchecked) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;

  friend Word free_reduce(std::span<const Letter> raw);
};

Word free_reduce(std::span<const Letter> raw);

// The commutator [u,v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator^-1 * core * conjugator
};
CyclicReduction cyclic_reduce(const Word& w);

using ExponentVector = std::map<Symbol, long>;
// Exponent sum of every symbol occurring in w (zero sums are kept).
ExponentVector exponent_vector(const Word& w);
bool in_commutator_subgroup(const Word& w);
bool in_square_subgroup(const Word& w);

// Equivalence class of a cyclically reduced word under rotation; the stored
// representative is the least rotation under letter order.
class CyclicWord {
 public:
  CyclicWord() = default;
  // Cyclically reduces w and keeps the least rotation.
  explicit CyclicWord(const Word& w);

  const Word& word() const noexcept { return rep_; }
  std::size_t size() const noexcept { return rep_.size(); }
  bool empty() const noexcept { return rep_.empty(); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) noexcept = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) noexcept {
    return a.rep_ <=> b.rep_;
  }

 private:
  Word rep_;
};

// Index of the least rotation of a (possibly empty) letter sequence.
std::size_t least_rotation(std::span<const Letter> letters);

// Finitely supported map variable -> Word; unmapped variables are fixed.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Symbol, Word>> init);

  // Throws DomainError if `var` is not a variable.
  void set(const Symbol& var, Word image);
  void erase(const Symbol& var) { map_.erase(var); }
  bool contains(const Symbol& var) const { return map_.count(var) != 0; }
  // Image of a symbol; symbols without an assignment map to themselves.
  Word image(const Symbol& s) const;
  Word image(const Letter& l) const;
  const std::map<Symbol, Word>& assignments() const noexcept { return map_; }
  bool empty() const noexcept { return map_.empty(); }

  friend bool operator==(const Substitution&, const Substitution&) noexcept = default;

 private:
  std::map<Symbol, Word> map_;
};

// Image of w under the homomorphism induced by s, freely reduced.
Word apply_substitution(const Substitution& s, const Word& w);
// apply(compose(s, t), w) == apply(t, apply(s, w)).
Substitution compose(const Substitution& first, const Substitution& second);
// Restriction of s to the given variables (identity entries are kept explicitly).
Substitution restrict_to(const Substitution& s, const std::set<Symbol>& vars);

// Text format: space-separated tokens `name`, `name^-1`, `name^k`; `1` is the
// empty word. All identifiers get the given kind.
Word parse_word(std::string_view text, SymbolKind kind);
std::string format_word(const Word& w);
// `x=a b^-1` style assignment; variable on the left, constants on the right.
std::pair<Symbol, Word> parse_assignment(std::string_view text);
std::string format_substitution(const Substitution& s);

// Convenience for tests and builders.
Letter letter(const Symbol& s, int sign = 1);

}  // namespace wicks
