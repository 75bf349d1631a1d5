#pragma once

// Witness families for the length bounds on solutions of [x,y] = U, the
// bound checker itself, and the fixed reproduction suite run by `wicks verify
// paper` and the acceptance binary.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wicks/forms.hpp"
#include "wicks/word.hpp"

namespace wicks {

// b_n^-1..b_1^-1 c_1^-1 b_1..b_n a_1..a_n c_1 a_n^-1..a_1^-1, length 4n+2.
Word witness_u1(int n);
// a_n^-1..a_1^-1 b_n^-1..b_1^-1 c_n^-1..c_1^-1 a_1..a_n b_1..b_n c_1..c_n, length 6n.
Word witness_u2(int n);

// A solution x1 -> x, y1 -> y of [x1,y1] = u.rotate(rotation), read off a
// factorization of that rotation.
struct BefWitness {
  std::size_t rotation = 0;
  Word x, y;
  std::size_t total() const noexcept { return x.size() + y.size(); }
};

struct BefReport {
  // (i): every class of solutions of [x,y] = u holds a solution with
  // |x|,|y| <= |u|/2 and |x|+|y| <= |u|-1; one witness per class, in the
  // order of solve_commutators.
  bool part_i = false;
  std::vector<std::optional<BefWitness>> class_witnesses;
  // (ii): some rotation u* of u has a solution with |x|,|y| <= |u|/2 - 1 and
  // |x|+|y| <= 2|u|/3; the shortest such witness (least total, then rotation).
  bool part_ii = false;
  std::optional<BefWitness> rotated;
};

// Requires u cyclically reduced with genus+(u) = 1; DomainError otherwise.
BefReport verify_bef(const Word& u, FormLibrary& library = FormLibrary::shared());

enum class ClaimStatus { pass, fail, skipped };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  int criterion = 0;  // acceptance criterion, 0 for supplementary checks
  ClaimStatus status = ClaimStatus::fail;
  std::string details;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  bool passed() const;  // no claim failed
};

struct SuiteOptions {
  bool skip_slow = false;  // skips the maximal genus-2 census
  std::uint64_t seed = 20260101;
};

// Every claim of the suite appears exactly once, in a fixed order. The
// matcher polynomial-bound claim runs last and covers every earlier claim.
VerificationReport run_reproduction_suite(const SuiteOptions& options = {}, FormLibrary& library = FormLibrary::shared());

// Claim ids in suite order.
std::vector<std::string> reproduction_suite_claims();

}  // namespace wicks
