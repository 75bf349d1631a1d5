#pragma once

// Cancellation-free images: all ways a cyclically reduced constant word U,
// read cyclically, is spelled letter for letter by a quadratic form whose
// variables take nonempty values.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wicks/forms.hpp"
#include "wicks/word.hpp"

namespace wicks {

struct Match {
  Word form;                         // f_0 f_1 ... f_{k-1}, read cyclically
  std::size_t rotation_offset = 0;   // position of U where the image of f_0 starts
  std::vector<std::size_t> cuts;     // start position in U of the image of each f_j
  std::vector<std::size_t> lengths;  // |image of f_j|
  Substitution assignment;           // variable -> nonempty constant word

  std::size_t target_length() const;
  // The form letter whose image contains position 0 of U, and the offset of
  // position 0 inside that image.
  std::pair<std::size_t, std::size_t> start_point() const;
  // Image of f_j as spelled in U.
  Word image_of_letter(std::size_t j) const { return assignment.image(form[j]); }
  // Concatenation of all images starting at f_0, without reduction.
  std::vector<Letter> spelled() const;
};

bool match_less(const Match& a, const Match& b);

struct MatchStats {
  std::uint64_t candidates = 0;  // complete cut vectors examined
  std::uint64_t bound = 0;       // k * C(n+k, k), saturated at UINT64_MAX
};

// Process-wide tally of every matcher call, for the polynomial-bound check.
struct MatcherTally {
  std::uint64_t calls = 0;
  std::uint64_t violations = 0;
  std::uint64_t total_candidates = 0;
  double worst_ratio = 0.0;  // max candidates / bound over all calls
};
MatcherTally matcher_tally();
void reset_matcher_tally();

std::uint64_t polynomial_bound(std::size_t n, std::size_t k);

// `form` quadratic (read cyclically), `u` nonempty and cyclically reduced.
// Sorted by (rotation_offset, lengths). Empty when |form| > |u|.
std::vector<Match> cancellation_free_matches(const Word& form, const Word& u, MatchStats* stats = nullptr);
std::vector<Match> cancellation_free_matches(const WicksForm& form, const CyclicWord& u,
                                             MatchStats* stats = nullptr);

// Images of m under the rotational symmetries of its form (relabelings that
// fix the cyclic form); includes m itself.
std::vector<Match> match_orbit(const Match& m);
// One representative per orbit: the least by assignment, then offset.
std::vector<Match> dedupe_matches(const std::vector<Match>& matches);
// Orbit member most convenient for an ordinary-word solution: f_0 starting at
// position 0 if possible, else any letter boundary at 0, else the least member.
Match preferred_alignment(const Match& m);

}  // namespace wicks
