#pragma once

// Quadratic words and their surfaces: a quadratic word W written around the
// boundary of a disk, with the two edges of each variable glued, gives a
// closed surface S_W.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

struct QuadraticReport {
  bool is_quadratic = false;
  // The two flags below are meaningful only when is_quadratic is true.
  bool orientable = false;
  bool irredundant = false;
  std::set<Symbol> variables;
};

// Reads `w` cyclically. A word containing constants is not quadratic.
QuadraticReport classify_quadratic(const Word& w);
QuadraticReport classify_quadratic(const CyclicWord& w);

// Two distinct, non-inverse letters x, y such that every occurrence of either
// lies in a subword (xy)^{+-1}, read cyclically unless `cyclic` is false;
// nullopt for irredundant words.
std::optional<std::pair<Letter, Letter>> find_redundant_pair(const Word& w, bool cyclic = true);

struct SurfaceData {
  int edge_count = 0;
  int vertex_count = 1;
  int chi = 2;
  bool orientable = true;
  int genus = 0;
};

// Corner k of the polygon is the point just before letter k. Letter k runs
// from corner k to corner k+1 when its sign is +1 and backwards otherwise.
struct CornerStructure {
  std::vector<int> vertex_of_corner;  // vertex class of every corner, 0..V-1
  int vertex_count = 0;
  // Initial and terminal vertex of the edge e_x of every variable.
  std::map<Symbol, std::pair<int, int>> edge_ends;
};

// Requires a quadratic word (read cyclically); throws DomainError otherwise.
CornerStructure corner_structure(const Word& w);
SurfaceData surface_data(const Word& w);
SurfaceData surface_data(const CyclicWord& w);

// chi for a given orientability and genus.
constexpr int euler_characteristic(bool orientable, int genus) {
  return orientable ? 2 - 2 * genus : 2 - genus;
}

struct SplitRecord {
  Symbol original;
  Symbol first;   // original = first * second
  Symbol second;
};

struct AlignedWord {
  Word word;                 // ordinary quadratic word
  Substitution assignment;   // word * assignment spells U without cancellation
  std::optional<SplitRecord> split;
};

// `form` is a quadratic word read cyclically together with a cyclic
// cancellation-free assignment. The ordinary word U starts `offset` letters into
// the image of form letter `letter_index`. With offset 0 the result is the
// rotation of form starting at that letter; otherwise the letter's variable x is
// replaced by two fresh variables x_1 x_2 so the ordinary word starts between them.
AlignedWord split_for_alignment(const Word& form, const Substitution& assignment,
                                std::size_t letter_index, std::size_t offset);

}  // namespace wicks
