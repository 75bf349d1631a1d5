#pragma once

// Tracked automorphisms of F, reduction of quadratic words to the standard
// surface words, and reduction of arbitrary solutions to cancellation-free ones.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

// An automorphism of F given by its action on a finite set of variables (the
// support) and the action of its inverse. Variables outside the support are
// fixed by both maps.
class TrackedAutomorphism {
 public:
  TrackedAutomorphism() = default;

  // Throws DomainError unless forward and backward are mutually inverse on
  // the union of their domains.
  static TrackedAutomorphism from_maps(Substitution forward, Substitution backward);

  // x -> left x right; left and right must not involve x.
  static TrackedAutomorphism transvection(const Symbol& x, const Word& left, const Word& right);
  static TrackedAutomorphism inversion(const Symbol& x);
  // v -> p^-1 v p for v in vars; p must be a word over vars.
  static TrackedAutomorphism conjugation(const std::set<Symbol>& vars, const Word& p);
  // Injective renaming of variables, extended to a permutation of the
  // variables it mentions.
  static TrackedAutomorphism renaming(const std::map<Symbol, Symbol>& names);

  const Substitution& forward() const noexcept { return forward_; }
  const Substitution& backward() const noexcept { return backward_; }
  const std::set<Symbol>& support() const noexcept { return support_; }

  Word apply(const Word& w) const { return apply_substitution(forward_, w); }
  Word unapply(const Word& w) const { return apply_substitution(backward_, w); }
  TrackedAutomorphism inverse() const;

  // `first` then `second` (right actions: w -> (w first) second).
  friend TrackedAutomorphism compose(const TrackedAutomorphism& first, const TrackedAutomorphism& second);

 private:
  TrackedAutomorphism(Substitution forward, Substitution backward);
  Substitution forward_, backward_;
  std::set<Symbol> support_;
};

TrackedAutomorphism compose(const TrackedAutomorphism& first, const TrackedAutomorphism& second);

// Standard variables x<i>, y<i>.
Symbol standard_x(int i);
Symbol standard_y(int i);
// [x1,y1]...[xg,yg] and x1^2...xg^2.
Word standard_orientable(int genus);
Word standard_nonorientable(int genus);
Word standard_word(bool orientable, int genus);

// The automorphism taking s^2 [y,z] to s^2 z^2 y^2, fixing other variables.
TrackedAutomorphism square_handle_exchange(const Symbol& s, const Symbol& y, const Symbol& z);

// An automorphism gamma with w gamma equal, as a reduced word, to the standard
// word of w's genus and orientability. Throws DomainError if w is not quadratic.
TrackedAutomorphism standard_form_automorphism(const Word& w);

enum class MoveKind { redundancy, cancellation_split, trivial_image_whitehead };
std::string to_string(MoveKind kind);

// (N, |Var|) with N the total length of the images of the variables of W.
struct Measure {
  std::size_t total_length = 0;
  std::size_t variables = 0;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};
Measure solution_measure(const Word& w, const Substitution& psi);

struct ReductionStep {
  MoveKind kind;
  TrackedAutomorphism move;
  Measure before, after;
  Word word_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReductionResult {
  Word word;                   // irredundant quadratic, w beta
  Substitution psi;            // cancellation-free solution of word = u, on Var(word)
  Substitution psi_extended;   // psi plus the images of every other variable touched
  TrackedAutomorphism beta;
  ReductionTrace trace;
};

// Requires w quadratic, u nontrivial and cyclically reduced, and w psi = u.
// psi = beta.forward then psi_extended on Var(w). Throws HypothesisViolation
// when a trivial image cannot be removed without lowering the genus.
ReductionResult reduce_solution(const Word& w, const Substitution& psi, const Word& u);

// True if w psi spells u letter for letter with every image nonempty.
bool is_cancellation_free(const Word& w, const Substitution& psi, const Word& u);

}  // namespace wicks
