#include "wicks/oracle.hpp"

#include <numeric>
#include <vector>

#include "wicks/error.hpp"

namespace wicks {

namespace {

int find(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

// Genus of the surface glued from a polygon whose sides i and mate[i] are
// identified, with same[i] telling whether both occurrences have one sign.
// The first occurrence of each pair is read with sign +.
int glued_genus(const std::vector<int>& mate, const std::vector<bool>& same, bool orientable) {
  const int n = static_cast<int>(mate.size());
  std::vector<int> sign(n, 1);
  for (int i = 0; i < n; ++i) {
    if (mate[i] < i && !same[i]) sign[i] = -1;
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto tail = [&](int i) { return sign[i] > 0 ? i : (i + 1) % n; };
  auto head = [&](int i) { return sign[i] > 0 ? (i + 1) % n : i; };
  for (int i = 0; i < n; ++i) {
    const int j = mate[i];
    if (j < i) continue;
    parent[find(parent, tail(i))] = find(parent, tail(j));
    parent[find(parent, head(i))] = find(parent, head(j));
  }
  int vertices = 0;
  for (int i = 0; i < n; ++i) vertices += find(parent, i) == i;
  const int chi = vertices - n / 2 + 1;
  return orientable ? (2 - chi) / 2 : 2 - chi;
}

struct Search {
  Word u;
  int n = 0;  // number of pieces
  std::vector<int> cut;
  std::vector<int> mate;
  std::vector<bool> same;
  std::optional<int> best_orientable, best_nonorientable;

  bool equal_pieces(int i, int j, bool inverted) const {
    const int li = cut[i + 1] - cut[i];
    if (li != cut[j + 1] - cut[j]) return false;
    for (int t = 0; t < li; ++t) {
      const Letter& a = u[cut[i] + t];
      const Letter& b = inverted ? u[cut[j + 1] - 1 - t] : u[cut[j] + t];
      if (a.symbol != b.symbol || a.sign != (inverted ? -b.sign : b.sign)) return false;
    }
    return true;
  }

  void record() {
    bool orientable = true;
    for (int i = 0; i < n; ++i) orientable = orientable && !same[i];
    auto& best = orientable ? best_orientable : best_nonorientable;
    const int g = glued_genus(mate, same, orientable);
    if (g > 0 && (!best || g < *best)) best = g;
  }

  void pair_from(int i) {
    while (i < n && mate[i] >= 0) ++i;
    if (i == n) {
      record();
      return;
    }
    for (int j = i + 1; j < n; ++j) {
      if (mate[j] >= 0) continue;
      for (bool inverted : {true, false}) {
        if (!equal_pieces(i, j, inverted)) continue;
        mate[i] = j;
        mate[j] = i;
        same[i] = same[j] = !inverted;
        pair_from(i + 1);
        mate[i] = mate[j] = -1;
      }
    }
  }

  void cut_from(int i) {
    if (i == n) {
      pair_from(0);
      return;
    }
    const int len = static_cast<int>(u.size());
    for (int c = cut[i - 1] + 1; c <= len - (n - i); ++c) {
      cut[i] = c;
      cut_from(i + 1);
    }
  }

  void run() {
    for (n = 2; n <= static_cast<int>(u.size()); n += 2) {
      cut.assign(n + 1, 0);
      cut[n] = static_cast<int>(u.size());
      mate.assign(n, -1);
      same.assign(n, false);
      cut_from(1);
    }
  }
};

// Every quadratic word W with |W| <= |core| and every way of reading core,
// from position 0, as a letter-for-letter image of W with nonempty images.
Search exhaust(const Word& u) {
  Search s;
  s.u = cyclic_reduce(u).core;
  if (s.u.size() > brute_force_max_length) {
    throw DomainError("brute-force genus limited to length " + std::to_string(brute_force_max_length));
  }
  s.run();
  return s;
}

}  // namespace

std::optional<int> brute_force_genus_plus(const Word& u) {
  if (u.empty()) return 0;
  return exhaust(u).best_orientable;
}

std::optional<int> brute_force_genus_minus(const Word& u) {
  if (u.empty()) return 0;
  const Search s = exhaust(u);
  std::optional<int> best = s.best_nonorientable;
  if (s.best_orientable && (!best || *best > 2 * *s.best_orientable + 1)) best = 2 * *s.best_orientable + 1;
  return best;
}

}  // namespace wicks
