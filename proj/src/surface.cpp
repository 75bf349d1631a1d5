#include "wicks/surface.hpp"

#include <numeric>

#include "wicks/error.hpp"

namespace wicks {

QuadraticReport classify_quadratic(const Word& w) {
  QuadraticReport report;
  std::map<Symbol, std::vector<int>> signs;
  for (const auto& l : w) {
    if (l.symbol.is_constant()) return report;
    signs[l.symbol].push_back(l.sign);
  }
  for (const auto& [var, s] : signs) {
    if (s.size() != 2) return report;
    report.variables.insert(var);
  }
  report.is_quadratic = true;
  report.orientable = true;
  for (const auto& [var, s] : signs) {
    if (s[0] == s[1]) report.orientable = false;
  }
  report.irredundant = !find_redundant_pair(w).has_value();
  return report;
}

QuadraticReport classify_quadratic(const CyclicWord& w) { return classify_quadratic(w.word()); }

std::optional<std::pair<Letter, Letter>> find_redundant_pair(const Word& w, bool cyclic) {
  const std::size_t k = w.size();
  if (k < 2) return std::nullopt;
  // Neighbours of position j, absent at the ends of an ordinary word.
  auto next = [&](std::size_t j) -> std::optional<Letter> {
    if (j + 1 < k) return w[j + 1];
    if (cyclic) return w[0];
    return std::nullopt;
  };
  auto prev = [&](std::size_t j) -> std::optional<Letter> {
    if (j > 0) return w[j - 1];
    if (cyclic) return w[k - 1];
    return std::nullopt;
  };
  const std::size_t starts = cyclic ? k : k - 1;
  for (std::size_t i = 0; i < starts; ++i) {
    const Letter x = w[i];
    const Letter y = *next(i);
    if (x.symbol == y.symbol) continue;
    bool only_in_blocks = true;
    for (std::size_t j = 0; j < k && only_in_blocks; ++j) {
      const Letter& l = w[j];
      if (l == x) {
        only_in_blocks = next(j) == y;
      } else if (l == x.inverse()) {
        only_in_blocks = prev(j) == y.inverse();
      } else if (l == y) {
        only_in_blocks = prev(j) == x;
      } else if (l == y.inverse()) {
        only_in_blocks = next(j) == x.inverse();
      }
    }
    if (only_in_blocks) return std::make_pair(x, y);
  }
  return std::nullopt;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CornerStructure corner_structure(const Word& w) {
  const auto report = classify_quadratic(w);
  if (!report.is_quadratic) throw DomainError("surface of a non-quadratic word: " + format_word(w));
  const std::size_t k = w.size();
  CornerStructure cs;
  if (k == 0) {
    cs.vertex_count = 1;
    return cs;
  }
  auto tail = [&](std::size_t i) { return static_cast<int>(w[i].sign > 0 ? i : (i + 1) % k); };
  auto head = [&](std::size_t i) { return static_cast<int>(w[i].sign > 0 ? (i + 1) % k : i); };
  std::map<Symbol, std::vector<std::size_t>> positions;
  for (std::size_t i = 0; i < k; ++i) positions[w[i].symbol].push_back(i);
  UnionFind uf(k);
  for (const auto& [var, pos] : positions) {
    uf.unite(tail(pos[0]), tail(pos[1]));
    uf.unite(head(pos[0]), head(pos[1]));
  }
  std::map<int, int> ids;
  cs.vertex_of_corner.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    auto [it, inserted] = ids.emplace(uf.find(static_cast<int>(c)), static_cast<int>(ids.size()));
    cs.vertex_of_corner[c] = it->second;
  }
  cs.vertex_count = static_cast<int>(ids.size());
  for (const auto& [var, pos] : positions) {
    cs.edge_ends[var] = {cs.vertex_of_corner[tail(pos[0])], cs.vertex_of_corner[head(pos[0])]};
  }
  return cs;
}

SurfaceData surface_data(const Word& w) {
  const auto report = classify_quadratic(w);
  if (!report.is_quadratic) throw DomainError("surface of a non-quadratic word: " + format_word(w));
  SurfaceData sd;
  if (w.empty()) return sd;
  const auto cs = corner_structure(w);
  sd.edge_count = static_cast<int>(w.size() / 2);
  sd.vertex_count = cs.vertex_count;
  sd.chi = sd.vertex_count - sd.edge_count + 1;
  sd.orientable = report.orientable;
  sd.genus = sd.orientable ? (2 - sd.chi) / 2 : 2 - sd.chi;
  return sd;
}

SurfaceData surface_data(const CyclicWord& w) { return surface_data(w.word()); }

namespace {

Symbol fresh_variable(const std::set<Symbol>& taken, const std::string& stem) {
  for (std::string name = stem;; name += "_") {
    Symbol s = Symbol::variable(name);
    if (!taken.count(s)) return s;
  }
}

}  // namespace

AlignedWord split_for_alignment(const Word& form, const Substitution& assignment,
                                std::size_t letter_index, std::size_t offset) {
  const std::size_t k = form.size();
  if (letter_index >= k) throw DomainError("split_for_alignment: letter index out of range");
  AlignedWord out;
  if (offset == 0) {
    out.word = form.rotate(letter_index);
    out.assignment = restrict_to(assignment, out.word.symbols());
    return out;
  }
  const Letter& cut = form[letter_index];
  const Word spelled = assignment.image(cut);
  if (offset >= spelled.size()) throw DomainError("split_for_alignment: offset outside the letter image");
  const Word s1 = spelled.subword(0, offset);
  const Word s2 = spelled.subword(offset, spelled.size() - offset);

  const auto taken = form.symbols();
  SplitRecord rec{cut.symbol, fresh_variable(taken, cut.symbol.name() + "_1"),
                  fresh_variable(taken, cut.symbol.name() + "_2")};
  out.assignment = restrict_to(assignment, taken);
  out.assignment.erase(cut.symbol);
  if (cut.sign > 0) {
    out.assignment.set(rec.first, s1);
    out.assignment.set(rec.second, s2);
  } else {
    out.assignment.set(rec.first, s2.inverse());
    out.assignment.set(rec.second, s1.inverse());
  }

  // Expand x -> x_1 x_2 cyclically, then start just after the first piece of
  // the cut occurrence.
  std::vector<Letter> expanded;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Letter& l = form[i];
    if (l.symbol == rec.original) {
      const Letter a{l.sign > 0 ? rec.first : rec.second, l.sign};
      const Letter b{l.sign > 0 ? rec.second : rec.first, l.sign};
      expanded.push_back(a);
      if (i == letter_index) start = expanded.size();
      expanded.push_back(b);
    } else {
      expanded.push_back(l);
    }
  }
  std::vector<Letter> rotated(expanded.begin() + static_cast<std::ptrdiff_t>(start), expanded.end());
  rotated.insert(rotated.end(), expanded.begin(), expanded.begin() + static_cast<std::ptrdiff_t>(start));
  out.word = Word(std::span<const Letter>(rotated));
  out.split = rec;
  return out;
}

}  // namespace wicks
