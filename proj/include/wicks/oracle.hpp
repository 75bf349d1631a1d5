#pragma once

// Exhaustive genus computation for short words, independent of the form
// tables and the matcher: every ordinary quadratic word W with |W| <= |U| is
// tried against every factorization of the cyclic core of U into |W|
// consecutive nonempty pieces.

#include <cstddef>
#include <optional>

#include "wicks/word.hpp"

namespace wicks {

// Limit on |core(U)| accepted by the brute-force search.
inline constexpr std::size_t brute_force_max_length = 10;

// nullopt is infinity. Throws DomainError when |core(U)| exceeds the limit.
std::optional<int> brute_force_genus_plus(const Word& u);
// For U in H' the search is capped by genus- <= 2 genus+ + 1.
std::optional<int> brute_force_genus_minus(const Word& u);

}  // namespace wicks
