#include <doctest.h>

#include "support.hpp"
#include "wicks/error.hpp"
#include "wicks/normalizer.hpp"
#include "wicks/surface.hpp"

using namespace wicks;
using namespace wicks::test;

TEST_CASE("classify quadratic words") {
  const auto torus = classify_quadratic(V("x^-1 y^-1 x y"));
  CHECK(torus.is_quadratic);
  CHECK(torus.orientable);
  CHECK(torus.irredundant);
  CHECK(torus.variables == std::set<Symbol>{vs("x"), vs("y")});

  const auto xyxy = classify_quadratic(CyclicWord(V("x y x y")));
  CHECK(xyxy.is_quadratic);
  CHECK_FALSE(xyxy.orientable);
  CHECK_FALSE(xyxy.irredundant);

  CHECK_FALSE(classify_quadratic(V("x^2 y^2 z")).is_quadratic);
  CHECK_FALSE(classify_quadratic(V("x x x^-1")).is_quadratic);
  CHECK_FALSE(classify_quadratic(C("a^-1 b^-1 a b")).is_quadratic);
}

TEST_CASE("redundant pairs") {
  // Cyclically, z1 ... z2^-1 wraps into a block; as an ordinary word it does not.
  const Word w = V("z y^-1 x^-1 y x z^-1");
  CHECK_FALSE(find_redundant_pair(w, false));
  CHECK(find_redundant_pair(V("x y x y"), false));
  CHECK(find_redundant_pair(V("x y^-1 z y x^-1 z^-1"), false));
  CHECK_FALSE(find_redundant_pair(V("x^-1 y^-1 z^-1 x y z")));
}

TEST_CASE("surface data") {
  const auto torus = surface_data(V("x^-1 y^-1 x y"));
  CHECK(torus.edge_count == 2);
  CHECK(torus.vertex_count == 1);
  CHECK(torus.chi == 0);
  CHECK(torus.orientable);
  CHECK(torus.genus == 1);

  const auto rp2 = surface_data(V("x^2"));
  CHECK(rp2.edge_count == 1);
  CHECK(rp2.vertex_count == 1);
  CHECK(rp2.chi == 1);
  CHECK_FALSE(rp2.orientable);
  CHECK(rp2.genus == 1);

  const auto klein = surface_data(V("x^2 y^2"));
  CHECK(klein.chi == 0);
  CHECK_FALSE(klein.orientable);
  CHECK(klein.genus == 2);

  const auto six = surface_data(V("x^-1 y^-1 z^-1 x y z"));
  CHECK(six.vertex_count == 2);
  CHECK(six.genus == 1);

  const auto sphere = surface_data(Word());
  CHECK(sphere.chi == 2);
  CHECK(sphere.genus == 0);

  CHECK(surface_data(V("x x^-1")).chi == 2);
  CHECK_THROWS_AS(surface_data(V("x y")), DomainError);
  CHECK(euler_characteristic(true, 2) == -2);
  CHECK(euler_characteristic(false, 3) == -1);
}

TEST_CASE("split for alignment") {
  // U = a^-1 c^-1 a b c b^-1 is the cyclic image of x^-1 y^-1 x y under
  // x -> ab, y -> c, with U starting one letter into the image of x^-1.
  const Word form = V("x^-1 y^-1 x y");
  const Substitution m{{vs("x"), C("a b")}, {vs("y"), C("c")}};
  const Word u = C("a^-1 c^-1 a b c b^-1");
  const AlignedWord aw = split_for_alignment(form, m, 0, 1);
  REQUIRE(aw.split);
  const Symbol x1 = aw.split->first, x2 = aw.split->second;
  CHECK(aw.split->original == vs("x"));
  const Word want = Word{{x1, -1}, {vs("y"), -1}, {x1, 1}, {x2, 1}, {vs("y"), 1}, {x2, -1}};
  CHECK(aw.word == want);
  CHECK(aw.assignment.image(x1) == C("a"));
  CHECK(aw.assignment.image(x2) == C("b"));
  CHECK(apply_substitution(aw.assignment, aw.word) == u);
  const auto q = classify_quadratic(aw.word);
  CHECK(q.orientable);
  // Redundant only across the cut: x2^-1 x1^-1 wraps around.
  CHECK_FALSE(find_redundant_pair(aw.word, false));
  CHECK(find_redundant_pair(aw.word, true));

  // Boundary start: a pure rotation.
  const AlignedWord rot = split_for_alignment(form, m, 2, 0);
  CHECK_FALSE(rot.split);
  CHECK(rot.word == V("x y x^-1 y^-1"));

  // Start inside the image of y^-1 under x -> a, y -> b c.
  const Substitution m2{{vs("x"), C("a")}, {vs("y"), C("b c")}};
  const AlignedWord sy = split_for_alignment(form, m2, 1, 1);
  REQUIRE(sy.split);
  CHECK(sy.split->original == vs("y"));
  // The ordinary word starts inside y^-1 = c^-1 b^-1, after c^-1.
  CHECK(apply_substitution(sy.assignment, sy.word) == C("b^-1 a b c a^-1 c^-1"));
  CHECK(sy.word.size() == 6);
  CHECK(sy.word[0].symbol == sy.split->first);
}

TEST_CASE("Euler characteristic is invariant under normalizing automorphisms") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const int k = 1 + rng() % 5;
    const auto raw = random_quadratic(rng, k, t % 2 == 0);
    if (!raw_is_reduced(raw, true)) continue;
    const Word w{std::span<const Letter>(raw)};
    const TrackedAutomorphism g = standard_form_automorphism(w);
    const Word image = g.apply(w);
    REQUIRE(classify_quadratic(image).is_quadratic);
    CHECK(surface_data(image).chi == surface_data(w).chi);
    CHECK(surface_data(image).orientable == surface_data(w).orientable);
  }
}

TEST_CASE("genus is additive on disjoint nonorientable words") {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    auto a = random_quadratic(rng, 1 + rng() % 3);
    auto b = random_quadratic(rng, 1 + rng() % 3);
    for (auto& l : b) l.symbol = Symbol::variable("u" + l.symbol.name());
    if (!raw_is_reduced(a, true) || !raw_is_reduced(b, true)) continue;
    const Word wa{std::span<const Letter>(a)}, wb{std::span<const Letter>(b)};
    const auto sa = surface_data(wa), sb = surface_data(wb);
    if (sa.orientable || sb.orientable) continue;
    const auto s = surface_data(wa * wb);
    CHECK_FALSE(s.orientable);
    CHECK(s.genus == sa.genus + sb.genus);
  }
}

TEST_CASE("redundancy reduction keeps the Euler characteristic") {
  int checked = 0;
  for_each_quadratic(8, [&](const Word& w) {
    const auto pair = find_redundant_pair(w);
    if (!pair) return;
    const auto [p, q] = *pair;
    // p -> p q^-1 collapses every block (pq)^{+-1} to p^{+-1}.
    const TrackedAutomorphism m = p.sign > 0 ? TrackedAutomorphism::transvection(p.symbol, Word(), single(q.symbol, -q.sign))
                                             : TrackedAutomorphism::transvection(p.symbol, Word(q), Word());
    const Word reduced = cyclic_reduce(m.apply(w)).core;
    REQUIRE(classify_quadratic(reduced).is_quadratic);
    CHECK(reduced.size() + 2 == w.size());
    CHECK(surface_data(reduced).chi == surface_data(w).chi);
    ++checked;
  });
  CHECK(checked > 1000);
}
