#pragma once

// Wicks forms: irredundant quadratic cyclic words of a given genus and
// orientability, up to rotation and relabeling (permutations of X and
// inversions of single variables).

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

struct WicksForm {
  Word word;        // canonical rotation over v1..vk
  CyclicWord form;  // same word as a cyclic word
  bool orientable = true;
  int genus = 0;
  int length = 0;
  bool maximal = false;  // length is the largest possible for (orientable, genus)
};

// Variable v<i>, i >= 1; the names used by canonical forms.
Symbol form_variable(int index);

// Least representative over rotation x relabeling, over variables v1..vk.
// Throws DomainError on non-quadratic input.
CyclicWord canonical_form(const CyclicWord& w);
Word canonical_word(const Word& cyclic);

// How a quadratic word reaches its canonical word: rotating by `rotation` and
// then replacing each variable y by the letter relabel[y] gives `word`.
struct CanonicalLabeling {
  std::size_t rotation = 0;
  std::map<Symbol, Letter> relabel;
  Word word;
};
CanonicalLabeling canonical_labeling(const Word& cyclic);

// Rotations r (0 <= r < |form|) such that rotating the cyclic form by r is a
// relabeling of it. Always contains 0.
std::vector<std::size_t> rotational_symmetries(const Word& form);

// Range of form lengths for a key: [4g or 2g, 6(1-chi)], with the projective
// plane (nonorientable genus 1, only x^2) as the degenerate case.
std::pair<int, int> form_length_range(bool orientable, int genus);

struct EnumerationOptions {
  int max_length = -1;                      // < 0: no cap beyond the maximal length
  std::uint64_t node_budget = 4'000'000'000;  // search nodes per call
};

// Exhaustive and sorted (by length, then canonical word). Genus 0 gives an
// empty list; throws BudgetExceeded instead of returning a partial list.
std::vector<WicksForm> enumerate_wicks(bool orientable, int genus, bool maximal_only,
                                       const EnumerationOptions& opts = {});

// Table files: header `wicks <orientable|nonorientable> genus=<g> count=<n>`,
// then one canonical form per line. A sidecar `<file>.hash` holds the FNV-1a
// hash of the table text.
std::string table_file_name(bool orientable, int genus);
std::string format_table(bool orientable, int genus, const std::vector<WicksForm>& forms);
std::vector<WicksForm> parse_table(const std::string& text, bool& orientable, int& genus);
std::uint64_t content_hash(const std::string& text);
void write_table(const std::filesystem::path& dir, bool orientable, int genus,
                 const std::vector<WicksForm>& forms);
// nullopt when the file is missing or fails its hash check.
std::optional<std::vector<WicksForm>> read_table(const std::filesystem::path& dir, bool orientable,
                                                 int genus);

// Thread-safe cache of form tables. Complete tables are persisted to
// `table_dir` (when set) and reloaded from there on later runs.
class FormLibrary {
 public:
  explicit FormLibrary(std::optional<std::filesystem::path> table_dir = std::nullopt,
                       std::uint64_t node_budget = EnumerationOptions{}.node_budget);

  static FormLibrary& shared();

  // Every form of the key with length <= max_length. Throws TableUnavailable
  // when the enumeration budget is exceeded.
  std::vector<WicksForm> forms(bool orientable, int genus, std::size_t max_length);
  // The complete table for the key (all lengths).
  std::vector<WicksForm> complete(bool orientable, int genus);

  // Number of table files found unreadable or failing their hash check, and
  // therefore regenerated.
  int regenerations() const;

 private:
  struct Entry {
    int done_length = 0;  // every form with length <= done_length is present
    std::vector<WicksForm> forms;
  };
  Entry& extend(bool orientable, int genus, int length);

  std::optional<std::filesystem::path> dir_;
  std::uint64_t budget_;
  mutable std::mutex mutex_;
  std::map<std::pair<bool, int>, Entry> cache_;
  int regenerations_ = 0;
};

}  // namespace wicks
