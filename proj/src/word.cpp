#include "wicks/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "wicks/error.hpp"

namespace wicks {

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Symbol::Symbol(std::string name, SymbolKind kind) : name_(std::move(name)), kind_(kind) {
  if (!is_valid_identifier(name_)) throw MalformedInput("invalid symbol name '" + name_ + "'");
}

Letter letter(const Symbol& s, int sign) { return {s, sign}; }

Word free_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const auto& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw MalformedInput("letter sign must be +1 or -1");
    if (!out.empty() && out.back().is_inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out), Word::Unchecked{});
}

Word::Word(std::span<const Letter> letters) : letters_(free_reduce(letters).letters_) {}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out), Unchecked{});
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                          letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return Word(std::move(out), Unchecked{});
}

Word Word::cyclic_subword(std::size_t pos, std::size_t len) const {
  std::vector<Letter> out;
  out.reserve(len);
  const std::size_t n = letters_.size();
  for (std::size_t i = 0; i < len; ++i) out.push_back(letters_[(pos + i) % n]);
  return Word(std::span<const Letter>(out));
}

Word Word::rotate(std::size_t pos) const {
  if (letters_.empty()) return *this;
  pos %= letters_.size();
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(pos), letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  return Word(std::span<const Letter>(out));
}

bool Word::is_cyclically_reduced() const noexcept {
  return letters_.size() < 2 || !letters_.front().is_inverse_of(letters_.back());
}

std::set<Symbol> Word::symbols() const {
  std::set<Symbol> out;
  for (const auto& l : letters_) out.insert(l.symbol);
  return out;
}

std::size_t Word::occurrences(const Symbol& s) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [&](const Letter& l) { return l.symbol == s; }));
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out *= b;
  return out;
}

Word& Word::operator*=(const Word& other) {
  std::size_t i = 0;
  while (i < other.letters_.size() && !letters_.empty() &&
         letters_.back().is_inverse_of(other.letters_[i])) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  other.letters_.end());
  return *this;
}

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].is_inverse_of(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  // w = P core P^-1 with P = ls[0..lo); conjugator C = P^-1.
  return {w.subword(lo, hi - lo), w.subword(0, lo).inverse()};
}

ExponentVector exponent_vector(const Word& w) {
  ExponentVector out;
  for (const auto& l : w) out[l.symbol] += l.sign;
  return out;
}

bool in_commutator_subgroup(const Word& w) {
  const auto ev = exponent_vector(w);
  return std::all_of(ev.begin(), ev.end(), [](const auto& kv) { return kv.second == 0; });
}

bool in_square_subgroup(const Word& w) {
  const auto ev = exponent_vector(w);
  return std::all_of(ev.begin(), ev.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

std::size_t least_rotation(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = letters[(r + i) % n] <=> letters[(best + i) % n];
      if (c < 0) {
        best = r;
        break;
      }
      if (c > 0) break;
    }
  }
  return best;
}

CyclicWord::CyclicWord(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  rep_ = core.rotate(least_rotation(core.letters()));
}

Substitution::Substitution(std::initializer_list<std::pair<const Symbol, Word>> init) {
  for (const auto& [k, v] : init) set(k, v);
}

void Substitution::set(const Symbol& var, Word image) {
  if (!var.is_variable()) throw DomainError("substitution can only bind variables, got '" + var.name() + "'");
  map_[var] = std::move(image);
}

Word Substitution::image(const Symbol& s) const {
  if (auto it = map_.find(s); it != map_.end()) return it->second;
  return Word(Letter{s, 1});
}

Word Substitution::image(const Letter& l) const {
  Word w = image(l.symbol);
  return l.sign > 0 ? w : w.inverse();
}

Word apply_substitution(const Substitution& s, const Word& w) {
  Word out;
  for (const auto& l : w) out *= s.image(l);
  return out;
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out;
  for (const auto& [var, img] : first.assignments()) out.set(var, apply_substitution(second, img));
  for (const auto& [var, img] : second.assignments()) {
    if (!first.contains(var)) out.set(var, img);
  }
  return out;
}

Substitution restrict_to(const Substitution& s, const std::set<Symbol>& vars) {
  Substitution out;
  for (const auto& v : vars) {
    if (v.is_variable()) out.set(v, s.image(v));
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, SymbolKind kind) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) throw MalformedInput("empty word text (use 1 for the identity)");
  std::vector<Letter> raw;
  for (auto tok : tokens) {
    if (tok == "1") continue;
    long exponent = 1;
    std::string_view name = tok;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      auto exp_text = tok.substr(caret + 1);
      const char* first = exp_text.data();
      const char* last = exp_text.data() + exp_text.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (exp_text.empty() || ec != std::errc{} || ptr != last) {
        throw MalformedInput("bad exponent in token '" + std::string(tok) + "'");
      }
    }
    if (!is_valid_identifier(name)) throw MalformedInput("unknown symbol token '" + std::string(tok) + "'");
    Symbol s{std::string(name), kind};
    const int sign = exponent < 0 ? -1 : 1;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) raw.push_back({s, sign});
  }
  return free_reduce(raw);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += ls[i].symbol.name();
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::pair<Symbol, Word> parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw MalformedInput("assignment needs '=': " + std::string(text));
  auto lhs = split_tokens(text.substr(0, eq));
  if (lhs.size() != 1 || !is_valid_identifier(lhs.front())) {
    throw MalformedInput("bad assignment variable in '" + std::string(text) + "'");
  }
  return {Symbol::variable(std::string(lhs.front())), parse_word(text.substr(eq + 1), SymbolKind::constant)};
}

std::string format_substitution(const Substitution& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [var, img] : s.assignments()) {
    if (!first) os << ", ";
    first = false;
    os << var.name() << " -> " << format_word(img);
  }
  return os.str();
}

}  // namespace wicks
