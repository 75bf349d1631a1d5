#pragma once

// genus+ and genus- of elements of H, and stabilizer-class representatives of
// the solutions of [x1,y1]...[xg,yg] = U and x1^2...xg^2 = U.

#include <optional>
#include <string>
#include <vector>

#include "wicks/forms.hpp"
#include "wicks/matcher.hpp"
#include "wicks/normalizer.hpp"
#include "wicks/subgroups.hpp"
#include "wicks/surface.hpp"
#include "wicks/word.hpp"

namespace wicks {

struct GenusResult {
  std::optional<int> value;          // nullopt is infinity
  std::optional<Match> certificate;  // a match at genus `value`, when one exists
  std::vector<int> exhausted_below;  // genera at which no Wicks form matched
  // For infinity: the failing exponent-sum criterion. For a value forced by
  // genus- <= 2 genus+ + 1: a note saying so.
  std::string reason;
  bool forced = false;

  bool infinite() const noexcept { return !value.has_value(); }
};

GenusResult genus_plus(const Word& u, FormLibrary& library = FormLibrary::shared());
GenusResult genus_minus(const Word& u, FormLibrary& library = FormLibrary::shared());

enum class Distinctness { unresolved, resolved_distinct };
std::string to_string(Distinctness d);

struct SolutionClassRep {
  bool orientable = true;
  int genus = 0;
  Substitution rep;  // on the standard variables, in standard order
  // Provenance. Absent for representatives built from the three-squares identity.
  std::optional<Match> match;
  std::optional<SplitRecord> split;
  Word aligned_word;                // ordinary word W' after splitting
  Substitution aligned_assignment;  // cancellation-free solution of W' = core(U)
  TrackedAutomorphism gamma;        // W' gamma = standard word
  Word conjugator;                  // U = conjugator^-1 core(U) conjugator
  FoldedGraph fingerprint;          // core graph of the image subgroup
  Distinctness distinctness = Distinctness::unresolved;

  std::vector<Symbol> variables() const;
  std::vector<Word> images() const;
};

std::vector<SolutionClassRep> solve_commutators(const Word& u, FormLibrary& library = FormLibrary::shared());

struct SquaresSolution {
  int genus = 0;
  std::vector<SolutionClassRep> classes;
  // False when genus+(U) < genus/2, where the classification does not apply
  // and only one witness is given.
  bool complete = true;
};
SquaresSolution solve_squares(const Word& u, FormLibrary& library = FormLibrary::shared());

// Pairwise comparison of image subgroups. Reps with a unique subgroup are
// certainly in distinct classes; reps sharing one are left unresolved.
void verify_class_distinctness(std::vector<SolutionClassRep>& reps);

// The class of a solution phi of the standard equation of the given
// orientability and genus, as the canonical deduplicated cyclic match it
// reduces to. `u` must be nontrivial and cyclically reduced. Two solutions
// with equal keys are in the same stabilizer class.
Match solution_class_key(bool orientable, int genus, const Substitution& phi, const Word& u);
bool same_match(const Match& a, const Match& b);

}  // namespace wicks
