#include <doctest.h>

#include "support.hpp"
#include "wicks/error.hpp"

using namespace wicks;
using namespace wicks::test;

TEST_CASE("free reduction") {
  const Symbol a = cs("a"), b = cs("b"), c = cs("c");
  const std::vector<Letter> raw{{a, 1}, {b, 1}, {b, -1}, {c, 1}};
  CHECK(free_reduce(raw) == C("a c"));
  const Symbol x = vs("x");
  const std::vector<Letter> xx{{x, 1}, {x, -1}};
  CHECK(free_reduce(xx).empty());

  const Word u = C("b^-1 a^-1 b^2 a b^-1"), v = C("a");
  std::vector<Letter> cat;
  for (const Word& w : {u.inverse(), v.inverse(), u, v}) cat.insert(cat.end(), w.begin(), w.end());
  const Word r = free_reduce(cat);
  CHECK(r.size() == 14);
  CHECK(r == C("b a^-1 b^-2 a b a^-1 b^-1 a^-1 b^2 a b^-1 a"));
  CHECK(r == commutator(u, v));
}

TEST_CASE("symbols") {
  CHECK_THROWS_AS(Symbol::constant(""), MalformedInput);
  CHECK_THROWS_AS(Symbol::constant("1a"), MalformedInput);
  CHECK_THROWS_AS(Symbol::variable("a-b"), MalformedInput);
  CHECK_NOTHROW(Symbol::constant("a_1B"));
  CHECK(cs("a") != vs("a"));
  CHECK(cs("z") < vs("a"));
  // Equal spellings in the two namespaces never cancel.
  CHECK((single(cs("a")) * single(vs("a"), -1)).size() == 2);
}

TEST_CASE("cyclic reduction") {
  auto check = [](const char* w, const char* core, const char* conj) {
    const auto r = cyclic_reduce(C(w));
    CHECK(r.core == C(core));
    CHECK(r.conjugator == C(conj));
    CHECK(r.conjugator.inverse() * r.core * r.conjugator == C(w));
  };
  check("c^-1 a b c", "a b", "c");
  check("a b a^-1", "b", "a^-1");
  check("a b", "a b", "1");
  check("1", "1", "1");
}

TEST_CASE("exponent sums") {
  const Word ab = C("a^-1 b^-1 a b");
  CHECK(exponent_vector(ab) == ExponentVector{{cs("a"), 0}, {cs("b"), 0}});
  CHECK(in_commutator_subgroup(ab));
  CHECK(in_square_subgroup(ab));
  const Word sq = C("a^2 b^4");
  CHECK(exponent_vector(sq) == ExponentVector{{cs("a"), 2}, {cs("b"), 4}});
  CHECK(in_square_subgroup(sq));
  CHECK_FALSE(in_commutator_subgroup(sq));
  const Word odd = C("a b^2");
  CHECK(exponent_vector(odd) == ExponentVector{{cs("a"), 1}, {cs("b"), 2}});
  CHECK_FALSE(in_square_subgroup(odd));
}

TEST_CASE("substitution") {
  const Word w = V("x^-1 y^-1 x y");
  CHECK(apply_substitution({{vs("x"), C("a b")}, {vs("y"), C("c")}}, w) == C("b^-1 a^-1 c^-1 a b c"));
  CHECK(apply_substitution({}, w) == w);
  CHECK(apply_substitution({{vs("x"), C("a")}, {vs("y"), C("a")}}, w).empty());
  Substitution s;
  CHECK_THROWS_AS(s.set(cs("a"), C("b")), DomainError);
}

TEST_CASE("text format") {
  CHECK(format_word(C("b^-1 a^-1 b^2 a b^-1")) == "b^-1 a^-1 b^2 a b^-1");
  CHECK(C("a^3") == C("a a a"));
  CHECK(C("a^-2") == C("a^-1 a^-1"));
  CHECK(C("1").empty());
  CHECK(format_word(Word()) == "1");
  CHECK(C("a a^-1 b") == C("b"));
  CHECK_THROWS_AS(C("a^"), MalformedInput);
  CHECK_THROWS_AS(C("a^x"), MalformedInput);
  CHECK_THROWS_AS(C("(a)"), MalformedInput);
  const auto [v, img] = parse_assignment("x=a b^-1");
  CHECK(v == vs("x"));
  CHECK(img == C("a b^-1"));
  CHECK_THROWS_AS(parse_assignment("a b"), MalformedInput);
}

TEST_CASE("cyclic words") {
  const CyclicWord w(C("a b c"));
  CHECK(w == CyclicWord(C("b c a")));
  CHECK(w == CyclicWord(C("d^-1 c a b d")));
  CHECK(w != CyclicWord(C("a c b")));
  CHECK(w.word()[0].symbol == cs("a"));
}

TEST_CASE("word properties on random input") {
  Rng rng(11);
  const auto abc = alphabet(3);
  const auto xyz = alphabet(3, SymbolKind::variable);
  for (int t = 0; t < 300; ++t) {
    const auto raw = random_letters(rng, abc, rng() % 12);
    const Word r = free_reduce(raw);
    CHECK(r.size() <= raw.size());
    CHECK(free_reduce(r.letters()) == r);

    const auto cr = cyclic_reduce(r);
    CHECK(cr.core.size() <= r.size());
    CHECK(cr.core.is_cyclically_reduced());
    CHECK(cr.conjugator.inverse() * cr.core * cr.conjugator == r);

    const Word u = random_word(rng, abc, rng() % 8), v = random_word(rng, abc, rng() % 8);
    ExponentVector sum = exponent_vector(u);
    for (const auto& [s, e] : exponent_vector(v)) sum[s] += e;
    ExponentVector uv = exponent_vector(u * v);
    for (const auto& [s, e] : sum) CHECK(uv[s] == e);

    Substitution s, t2;
    for (const auto& x : xyz) {
      s.set(x, random_word(rng, abc, rng() % 4));
      t2.set(x, random_word(rng, xyz, rng() % 3));
    }
    const Word w = random_word(rng, xyz, rng() % 8);
    CHECK(apply_substitution(s, w.inverse()) == apply_substitution(s, w).inverse());
    CHECK(apply_substitution(compose(t2, s), w) == apply_substitution(s, apply_substitution(t2, w)));
    CHECK(parse_word(format_word(u), SymbolKind::constant) == u);
  }
}
