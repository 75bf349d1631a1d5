#include <doctest.h>

#include <set>
#include <tuple>

#include "support.hpp"
#include "wicks/forms.hpp"
#include "wicks/matcher.hpp"
#include "wicks/solver.hpp"

using namespace wicks;
using namespace wicks::test;

namespace {

using Key = std::pair<std::size_t, std::vector<std::size_t>>;

// Every start position and every composition of |u| into |form| positive
// parts, kept when the pieces are consistent images of the form letters.
std::set<Key> brute_force(const Word& form, const Word& u) {
  std::set<Key> out;
  const std::size_t n = u.size(), k = form.size();
  if (k > n) return out;
  std::vector<std::size_t> len(k, 1);
  std::function<void(std::size_t, std::size_t)> split = [&](std::size_t j, std::size_t left) {
    if (j + 1 == k) {
      len[j] = left;
      for (std::size_t s = 0; s < n; ++s) {
        std::map<Symbol, Word> image;
        bool ok = true;
        std::size_t pos = s;
        for (std::size_t i = 0; i < k && ok; ++i) {
          Word piece = u.cyclic_subword(pos % n, len[i]);
          if (form[i].sign < 0) piece = piece.inverse();
          auto [it, fresh] = image.emplace(form[i].symbol, piece);
          ok = fresh || it->second == piece;
          pos += len[i];
        }
        if (ok) out.insert({s, len});
      }
      return;
    }
    for (std::size_t l = 1; l + (k - j - 1) <= left; ++l) {
      len[j] = l;
      split(j + 1, left - l);
    }
  };
  split(0, n);
  return out;
}

std::set<Key> keys(const std::vector<Match>& ms) {
  std::set<Key> out;
  for (const auto& m : ms) out.insert({m.rotation_offset, m.lengths});
  return out;
}

void check_sound(const Match& m, const Word& u) {
  CHECK(Word(std::span<const Letter>(m.spelled())) == u.rotate(m.rotation_offset));
  CHECK(m.spelled().size() == u.size());
  CHECK(m.target_length() == u.size());
  std::size_t pos = m.rotation_offset;
  for (std::size_t j = 0; j < m.form.size(); ++j) {
    CHECK(m.cuts[j] == pos % u.size());
    CHECK(m.lengths[j] >= 1);
    CHECK(m.image_of_letter(j) == u.cyclic_subword(m.cuts[j], m.lengths[j]));
    pos += m.lengths[j];
  }
  for (const Symbol& v : m.form.symbols()) CHECK_FALSE(m.assignment.image(v).empty());
  const auto [letter, offset] = m.start_point();
  CHECK(offset < m.lengths[letter]);
  CHECK((m.cuts[letter] + offset) % u.size() == 0);
}

}  // namespace

TEST_CASE("matcher examples") {
  const Word torus = V("x^-1 y^-1 x y");
  const Word ab = C("a^-1 b^-1 a b");
  const auto m1 = cancellation_free_matches(torus, ab);
  REQUIRE_FALSE(m1.empty());
  CHECK(m1[0].rotation_offset == 0);
  CHECK(m1[0].assignment == Substitution{{vs("x"), C("a")}, {vs("y"), C("b")}});
  CHECK(dedupe_matches(m1).size() == 1);

  const Word u = C("a^-1 c^-1 a b c b^-1");
  const auto m2 = cancellation_free_matches(torus, u);
  std::set<std::map<Symbol, Word>> found;
  for (const auto& m : m2) found.insert(m.assignment.assignments());
  CHECK(found.count(Substitution{{vs("x"), C("a b")}, {vs("y"), C("c")}}.assignments()) == 1);
  CHECK(dedupe_matches(m2).size() == 1);

  CHECK(cancellation_free_matches(V("x^2"), ab).empty());
  for (const WicksForm& f : enumerate_wicks(false, 2, false)) CHECK(cancellation_free_matches(f.word, ab).empty());

  CHECK(cancellation_free_matches(V("x^-1 y^-1 z^-1 x y z"), C("a b")).empty());
  CHECK(dedupe_matches({}).empty());
}

TEST_CASE("matches of [a^2, b^3] against the genus-one forms") {
  const Word u = cyclic_reduce(commutator(C("a^2"), C("b^3"))).core;
  std::vector<Match> all;
  for (const WicksForm& f : enumerate_wicks(true, 1, false)) {
    const auto d = dedupe_matches(cancellation_free_matches(f.word, u));
    CHECK(dedupe_matches(d).size() == d.size());
    all.insert(all.end(), d.begin(), d.end());
  }
  CHECK(all.size() == 2 + 3 - 1);
}

TEST_CASE("matcher agrees with brute force on short words") {
  Rng rng(11);
  std::vector<Word> forms;
  for_each_quadratic(6, [&](const Word& w) { forms.push_back(w); });
  int nonempty = 0, cases = 0;
  for (int t = 0; t < 60; ++t) {
    const auto alpha = alphabet(1 + rng() % 3);
    Word u;
    do {
      u = random_word(rng, alpha, 2 + rng() % 7);
    } while (!u.is_cyclically_reduced());
    for (std::size_t i = 0; i < forms.size(); i += 1 + rng() % 7) {
      const Word& f = forms[i];
      MatchStats stats;
      const auto ms = cancellation_free_matches(f, u, &stats);
      CHECK(keys(ms) == brute_force(f, u));
      CHECK(stats.candidates <= stats.bound);
      CHECK(stats.bound == polynomial_bound(u.size(), f.size()));
      CHECK(std::is_sorted(ms.begin(), ms.end(), [](const Match& a, const Match& b) {
        return std::tie(a.rotation_offset, a.lengths) < std::tie(b.rotation_offset, b.lengths);
      }));
      for (const auto& m : ms) check_sound(m, u);
      nonempty += !ms.empty();
      ++cases;
    }
  }
  CHECK(cases > 500);
  CHECK(nonempty > 50);
}

TEST_CASE("polynomial bound") {
  CHECK(polynomial_bound(4, 4) == 4 * 70);
  CHECK(polynomial_bound(6, 2) == 2 * 28);
  CHECK(polynomial_bound(1000, 60) == UINT64_MAX);
  reset_matcher_tally();
  cancellation_free_matches(V("x^-1 y^-1 x y"), C("a^-1 b^-1 a b"));
  const auto t = matcher_tally();
  CHECK(t.calls >= 1);
  CHECK(t.violations == 0);
  CHECK(t.worst_ratio <= 1.0);
}

TEST_CASE("orbits and dedupe") {
  Rng rng(3);
  const auto forms = enumerate_wicks(true, 1, false);
  for (int t = 0; t < 40; ++t) {
    // Images of the six-letter form under random assignments give words with
    // several matches each.
    const Word& form = forms[1].word;
    Substitution s;
    for (const Symbol& v : form.symbols()) s.set(v, random_word(rng, alphabet(2), 1 + rng() % 3));
    const Word image = apply_substitution(s, form);
    const Word u = cyclic_reduce(image).core;
    if (u.empty()) continue;
    std::vector<Match> ms;
    for (const auto& f : forms) {
      const auto part = cancellation_free_matches(f.word, u);
      ms.insert(ms.end(), part.begin(), part.end());
    }
    const auto reps = dedupe_matches(ms);
    CHECK(reps.size() <= ms.size());
    for (const auto& m : ms) {
      const auto orbit = match_orbit(m);
      const auto in_orbit = [&](const Match& r) {
        return std::any_of(orbit.begin(), orbit.end(), [&](const Match& o) { return same_match(o, r); });
      };
      CHECK(std::any_of(orbit.begin(), orbit.end(), [&](const Match& o) { return same_match(o, m); }));
      CHECK(std::count_if(reps.begin(), reps.end(), in_orbit) == 1);
      for (const auto& o : orbit) check_sound(o, u);
      const Match p = preferred_alignment(m);
      CHECK(in_orbit(p));
      if (std::any_of(orbit.begin(), orbit.end(), [](const Match& o) { return o.rotation_offset == 0; }))
        CHECK(p.rotation_offset == 0);
    }
  }
}
