#include "wicks/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wicks/error.hpp"
#include "wicks/matcher.hpp"
#include "wicks/normalizer.hpp"
#include "wicks/oracle.hpp"
#include "wicks/solver.hpp"
#include "wicks/subgroups.hpp"
#include "wicks/surface.hpp"

namespace wicks {

namespace {

Word gen(char family, int i, int sign = 1) {
  return Word(Letter{Symbol::constant(std::string(1, family) + std::to_string(i)), sign});
}

// family_from..family_to with the given sign, stepping toward `to`.
Word run(char family, int from, int to, int sign) {
  Word w;
  for (int i = from;; i += from <= to ? 1 : -1) {
    w *= gen(family, i, sign);
    if (i == to) break;
  }
  return w;
}

void check_index(int n) {
  if (n < 1) throw DomainError("witness index must be at least 1, got " + std::to_string(n));
}

// Whether w is the raw concatenation of the pieces, with no cancellation.
bool spells(const Word& w, std::initializer_list<Word> pieces) {
  std::size_t at = 0;
  for (const Word& p : pieces) {
    if (at + p.size() > w.size()) return false;
    for (const Letter& l : p) {
      if (!(w[at++] == l)) return false;
    }
  }
  return at == w.size();
}

BefWitness witness(std::size_t rotation, Word x, Word y, const Word& target) {
  if (commutator(x, y) != target) throw std::logic_error("bound witness does not solve [x,y] = U");
  return {rotation, std::move(x), std::move(y)};
}

// Ordinary factorizations u = X1^-1 Y^-1 X1 X2 Y X2^-1 and
// u = X1^-1 Y^-1 Z^-1 X1 X2 Y Z X2^-1 with X1 X2, Y, Z nonempty, each turned
// into the solution [X2 X1, X1^-1 Y X2^-1] or [X2 Y X1, X1^-1 Z X2^-1].
std::vector<BefWitness> ordinary_witnesses(const Word& u) {
  std::vector<BefWitness> out;
  const std::size_t n = u.size();
  if (n % 2) return out;
  const std::size_t half = n / 2;
  for (std::size_t p = 0; p < half; ++p) {
    for (std::size_t q = 1; p + q <= half; ++q) {
      const Word x1 = u.subword(0, p).inverse();
      const Word y = u.subword(p, q).inverse();
      if (const std::size_t r = half - p - q; p + r >= 1) {
        const Word x2 = u.subword(2 * p + q, r);
        if (spells(u, {x1.inverse(), y.inverse(), x1, x2, y, x2.inverse()})) {
          out.push_back(witness(0, x2 * x1, x1.inverse() * y * x2.inverse(), u));
        }
      }
      for (std::size_t s = 1; p + q + s <= half; ++s) {
        const std::size_t r = half - p - q - s;
        if (p + r == 0) continue;
        const Word z = u.subword(p + q, s).inverse();
        const Word x2 = u.subword(2 * p + q + s, r);
        if (spells(u, {x1.inverse(), y.inverse(), z.inverse(), x1, x2, y, z, x2.inverse()})) {
          out.push_back(witness(0, x2 * y * x1, x1.inverse() * z * x2.inverse(), u));
        }
      }
    }
  }
  return out;
}

// Rotations u* = X^-1 Y^-1 X Y, solved by [X, Y], and u* = X^-1 Y^-1 Z^-1 X Y Z,
// solved by [Y X, X^-1 Z], [Y X, Y Z] and [Z^-1 X, Y Z].
std::vector<BefWitness> rotated_witnesses(const Word& u) {
  std::vector<BefWitness> out;
  const std::size_t n = u.size();
  if (n % 2) return out;
  const std::size_t half = n / 2;
  for (std::size_t t = 0; t < n; ++t) {
    const Word w = u.rotate(t);
    for (std::size_t p = 1; p < half; ++p) {
      const Word x = w.subword(0, p).inverse();
      const Word y = w.subword(p, half - p).inverse();
      if (spells(w, {x.inverse(), y.inverse(), x, y})) out.push_back(witness(t, x, y, w));
      for (std::size_t q = 1; p + q < half; ++q) {
        const Word yy = w.subword(p, q).inverse();
        const Word z = w.subword(p + q, half - p - q).inverse();
        if (!spells(w, {x.inverse(), yy.inverse(), z.inverse(), x, yy, z})) continue;
        out.push_back(witness(t, yy * x, x.inverse() * z, w));
        out.push_back(witness(t, yy * x, yy * z, w));
        out.push_back(witness(t, z.inverse() * x, yy * z, w));
      }
    }
  }
  return out;
}

Substitution as_solution(const BefWitness& w) { return {{standard_x(1), w.x}, {standard_y(1), w.y}}; }

}  // namespace

Word witness_u1(int n) {
  check_index(n);
  return run('b', n, 1, -1) * gen('c', 1, -1) * run('b', 1, n, 1) * run('a', 1, n, 1) * gen('c', 1) *
         run('a', n, 1, -1);
}

Word witness_u2(int n) {
  check_index(n);
  return run('a', n, 1, -1) * run('b', n, 1, -1) * run('c', n, 1, -1) * run('a', 1, n, 1) * run('b', 1, n, 1) *
         run('c', 1, n, 1);
}

BefReport verify_bef(const Word& u, FormLibrary& library) {
  if (u.empty() || !u.is_cyclically_reduced()) throw DomainError("verify_bef needs a nontrivial cyclically reduced word");
  const GenusResult g = genus_plus(u, library);
  if (g.value != 1) throw DomainError("verify_bef needs genus+ = 1, got " + (g.value ? std::to_string(*g.value) : "infinity"));
  const std::size_t n = u.size();

  BefReport report;
  auto by_length = [](const BefWitness& a, const BefWitness& b) {
    return std::make_pair(a.total(), a.rotation) < std::make_pair(b.total(), b.rotation);
  };

  std::vector<BefWitness> bounded;
  for (auto& w : ordinary_witnesses(u)) {
    if (2 * w.x.size() <= n && 2 * w.y.size() <= n && w.total() + 1 <= n) bounded.push_back(std::move(w));
  }
  std::stable_sort(bounded.begin(), bounded.end(), by_length);
  std::vector<Match> keys;
  for (const auto& w : bounded) keys.push_back(solution_class_key(true, 1, as_solution(w), u));

  report.part_i = true;
  for (const auto& c : solve_commutators(u, library)) {
    const Match key = solution_class_key(true, 1, c.rep, u);
    std::optional<BefWitness> found;
    for (std::size_t i = 0; i < bounded.size() && !found; ++i) {
      if (same_match(keys[i], key)) found = bounded[i];
    }
    report.part_i = report.part_i && found.has_value();
    report.class_witnesses.push_back(std::move(found));
  }

  for (auto& w : rotated_witnesses(u)) {
    if (2 * w.x.size() + 2 > n || 2 * w.y.size() + 2 > n || 3 * w.total() > 2 * n) continue;
    if (!report.rotated || by_length(w, *report.rotated)) report.rotated = std::move(w);
  }
  report.part_ii = report.rotated.has_value();
  return report;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == ClaimStatus::fail; });
}

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream details;

  // Records a failed expectation; returns `cond` so callers can branch on it.
  bool expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details << "FAILED: " << what << "; ";
    }
    return cond;
  }
};

using Rng = std::mt19937_64;

Word constants(std::string_view text) { return parse_word(text, SymbolKind::constant); }
Word variables(std::string_view text) { return parse_word(text, SymbolKind::variable); }

std::string genus_text(const GenusResult& g) { return g.value ? std::to_string(*g.value) : "inf"; }

// A freely reduced word of exactly `length` letters over `alphabet`.
Word random_word(Rng& rng, const std::vector<Symbol>& alphabet, std::size_t length) {
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter l{alphabet[rng() % alphabet.size()], rng() % 2 ? 1 : -1};
    if (!letters.empty() && letters.back().symbol == l.symbol && letters.back().sign == -l.sign) continue;
    letters.push_back(l);
  }
  return Word(std::span<const Letter>(letters));
}

std::vector<Symbol> alphabet(std::initializer_list<const char*> names) {
  std::vector<Symbol> out;
  for (const char* n : names) out.push_back(Symbol::constant(n));
  return out;
}

Substitution pair_solution(Word x, Word y) { return {{standard_x(1), std::move(x)}, {standard_y(1), std::move(y)}}; }

std::string describe(const std::vector<SolutionClassRep>& reps) {
  std::string out;
  for (const auto& r : reps) out += "{" + format_substitution(r.rep) + "} ";
  return out;
}

// ---- criterion 1 and 2: form censuses ----

bool same_forms(const std::vector<WicksForm>& forms, std::initializer_list<const char*> listed) {
  std::vector<Word> want, got;
  for (const char* w : listed) want.push_back(canonical_word(variables(w)));
  for (const auto& f : forms) got.push_back(f.word);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  return want == got;
}

void wicks_o1_count(Outcome& o, FormLibrary& lib) {
  const auto forms = lib.complete(true, 1);
  o.details << forms.size() << " forms; ";
  o.expect(forms.size() == 2, "two orientable genus-1 forms");
  o.expect(same_forms(forms, {"x^-1 y^-1 x y", "x^-1 y^-1 z^-1 x y z"}), "forms are x^-1y^-1xy and x^-1y^-1z^-1xyz");
}

void wicks_n2_count(Outcome& o, FormLibrary& lib) {
  const auto forms = lib.complete(false, 2);
  o.details << forms.size() << " forms; ";
  o.expect(forms.size() == 4, "four nonorientable genus-2 forms");
  o.expect(same_forms(forms, {"x^2 y^2", "x y^-1 x y", "z^-1 x^2 z y^2", "x z x y z^-1 y"}),
           "forms are x^2y^2, xy^-1xy, z^-1x^2zy^2, xzxyz^-1y");
}

void wicks_o2_maximal(Outcome& o, FormLibrary&) {
  const auto forms = enumerate_wicks(true, 2, true);
  o.details << forms.size() << " maximal forms; ";
  o.expect(forms.size() == 9, "nine maximal orientable genus-2 forms");
  o.expect(std::all_of(forms.begin(), forms.end(), [](const WicksForm& f) { return f.length == 18; }), "all of length 18");
}

// ---- criterion 3 ----

void genus_table(Outcome& o, FormLibrary& lib) {
  const Word c = constants("a^-1 b^-1 a b");
  const Word c2 = c * c;
  const GenusResult p1 = genus_plus(c, lib), m1 = genus_minus(c, lib);
  const GenusResult p2 = genus_plus(c2, lib), m2 = genus_minus(c2, lib);
  o.details << "[a,b]: " << genus_text(p1) << "/" << genus_text(m1) << ", [a,b]^2: " << genus_text(p2) << "/"
            << genus_text(m2) << "; ";
  o.expect(p1.value == 1, "genus+([a,b]) = 1");
  o.expect(m1.value == 3, "genus-([a,b]) = 3");
  o.expect(m1.exhausted_below == std::vector<int>{1, 2}, "[a,b] matches no nonorientable form of genus 1 or 2");
  o.expect(p2.value == 2, "genus+([a,b]^2) = 2");
  o.expect(m2.value == 1, "genus-([a,b]^2) = 1");
}

// ---- criterion 4 ----

void powers(Outcome& o, FormLibrary& lib, int m, int n) {
  const Word a = constants("a"), b = constants("b");
  const Word u = commutator(a.pow(m), b.pow(n));
  std::vector<Substitution> formulas;
  for (int i = 0; i < m; ++i) formulas.push_back(pair_solution(a.pow(m), a.pow(-i) * b.pow(n)));
  for (int j = 1; j < n; ++j) formulas.push_back(pair_solution(b.pow(j) * a.pow(m), b.pow(n)));
  std::vector<Match> formula_keys;
  for (const auto& f : formulas) {
    o.expect(apply_substitution(f, standard_orientable(1)) == u, "listed formula solves the equation");
    formula_keys.push_back(solution_class_key(true, 1, f, u));
  }
  for (std::size_t i = 0; i < formula_keys.size(); ++i) {
    for (std::size_t j = i + 1; j < formula_keys.size(); ++j) {
      o.expect(!same_match(formula_keys[i], formula_keys[j]), "listed formulas give distinct matches");
    }
  }
  const auto reps = solve_commutators(u, lib);
  o.details << reps.size() << " classes: " << describe(reps);
  o.expect(static_cast<int>(reps.size()) == m + n - 1, "m+n-1 classes");
  std::vector<int> hit(formulas.size(), 0);
  for (const auto& r : reps) {
    const Match key = solution_class_key(true, 1, r.rep, u);
    int found = 0;
    for (std::size_t i = 0; i < formula_keys.size(); ++i) {
      if (same_match(key, formula_keys[i])) {
        ++hit[i];
        ++found;
      }
    }
    o.expect(found == 1, "class of " + format_substitution(r.rep) + " is one of the listed classes");
    o.expect(r.distinctness == Distinctness::resolved_distinct, "class certified distinct");
  }
  o.expect(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }), "every listed class found once");
}

// ---- criterion 5 ----

void squares(Outcome& o, FormLibrary& lib, const std::vector<int>& exps) {
  Word u;
  Substitution want;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const Word ai = Word(Letter{Symbol::constant(std::string(1, static_cast<char>('a' + i))), 1});
    u *= ai.pow(2 * exps[i]);
    want.set(standard_x(static_cast<int>(i) + 1), ai.pow(exps[i]));
  }
  const SquaresSolution s = solve_squares(u, lib);
  o.details << format_word(u) << ": genus " << s.genus << ", " << describe(s.classes);
  o.expect(s.genus == static_cast<int>(exps.size()), "genus- equals the number of syllables");
  o.expect(s.complete, "classification complete");
  o.expect(s.classes.size() == 1 && s.classes[0].rep == want, "single class x_i -> a_i^n_i");
}

// ---- criterion 6 ----

void unique_class_commutator(Outcome& o, FormLibrary& lib) {
  const Word uu = constants("b^-1 a^-1 b^2 a b^-1"), vv = constants("a");
  const Word u = commutator(uu, vv);
  o.expect(u == constants("b a^-1 b^-2 a b a^-1 b^-1 a^-1 b^2 a b^-1 a"), "[U,V] spelled letter for letter");
  const auto six = variables("x^-1 y^-1 z^-1 x y z");
  o.expect(cancellation_free_matches(six, u).empty(), "not an image of the six-letter form");
  const auto reps = solve_commutators(u, lib);
  o.details << describe(reps);
  o.expect(reps.size() == 1, "exactly one class");
  if (reps.size() == 1) o.expect(reps[0].rep == pair_solution(uu, vv), "class representative x -> U, y -> V");
}

// ---- criterion 7 ----

void three_squares(Outcome& o, Rng& rng) {
  const auto abc = alphabet({"a", "b", "c"});
  for (int t = 0; t < 100; ++t) {
    const Word u = random_word(rng, abc, 1 + rng() % 6), v = random_word(rng, abc, 1 + rng() % 6);
    const Word rhs = u.inverse().pow(2) * (u * v.inverse()).pow(2) * v.pow(2);
    if (!o.expect(commutator(u, v) == rhs, "[U,V] = (U^-1)^2 (UV^-1)^2 V^2 for U=" + format_word(u) + ", V=" +
                                                format_word(v))) {
      return;
    }
  }
  o.details << "100 random pairs; ";
}

void two_squares_display(Outcome& o) {
  const Word lhs = commutator(constants("b^-1 a^-1 b^2 a b^-1"), constants("a"));
  const Word rhs = constants("b a^-1 b^-1 a^-1 b^-1 a b a b^-1").pow(2) * constants("b a^-1 b^-1 a^-1 b^2 a b^-1 a").pow(2);
  o.details << format_word(rhs) << "; ";
  o.expect(lhs == rhs, "displayed product of two squares equals [U,V]");
}

void free_basis_instance(Outcome& o) {
  const Word uu = constants("b^-1 a^-1 b^2 a b^-1"), vv = constants("a");
  const FoldedGraph k = folded_graph({uu, vv});
  o.details << "core graph " << k.vertex_count() << " vertices, rank " << k.rank() << "; ";
  o.expect(k.rank() == 2, "U, V freely generate K");
  o.expect(contains(k, uu) && contains(k, vv), "U, V in K");
  for (std::size_t i = 1; i < uu.size(); ++i) {
    o.expect(!contains(k, uu.subword(0, i)), "proper initial subword " + format_word(uu.subword(0, i)) + " not in K");
  }
}

// ---- criterion 8 ----

void sharp_u1(Outcome& o, FormLibrary& lib, int n) {
  const Word u = witness_u1(n);
  Word an, bn;
  for (int i = 1; i <= n; ++i) {
    an *= gen('a', i);
    bn *= gen('b', i);
  }
  const Word x0 = an * bn, y0 = an * gen('c', 1) * an.inverse();
  o.expect(u.size() == static_cast<std::size_t>(4 * n + 2), "|U1| = 4n+2");
  o.expect(commutator(x0, y0) == u, "phi0 solves [x,y] = U1");
  o.expect(cancellation_free_matches(variables("x^-1 y^-1 z^-1 x y z"), u).empty(), "not an image of the six-letter form");
  const auto reps = solve_commutators(u, lib);
  o.details << describe(reps);
  if (!o.expect(reps.size() == 1, "exactly one class")) return;
  const auto img = reps[0].images();
  o.expect(same_match(solution_class_key(true, 1, reps[0].rep, u), solution_class_key(true, 1, pair_solution(x0, y0), u)),
           "the class is that of phi0");
  o.expect(img[0].size() + img[1].size() + 1 == u.size(), "|x|+|y| = |U1|-1");
  o.expect(x0.size() + y0.size() + 1 == u.size(), "|x phi0|+|y phi0| = |U1|-1");
  o.expect(is_nielsen_reduced_pair(img[0], img[1]), "representative is Nielsen reduced");
  o.expect(is_nielsen_reduced_pair(x0, y0), "phi0 is Nielsen reduced");
}

void sharp_u2(Outcome& o, FormLibrary& lib, int n) {
  const Word u = witness_u2(n);
  o.expect(u.size() == static_cast<std::size_t>(6 * n), "|U2| = 6n");
  for (std::size_t t = 0; t < u.size(); ++t) {
    const Word w = u.rotate(t);
    const auto reps = solve_commutators(w, lib);
    if (!o.expect(reps.size() == 1, "rotation " + std::to_string(t) + " has exactly one class")) continue;
    const auto img = reps[0].images();
    o.expect(3 * (img[0].size() + img[1].size()) == 2 * u.size(), "rotation " + std::to_string(t) + ": sum (2/3)|U2|");
    o.expect(is_nielsen_reduced_pair(img[0], img[1]), "rotation " + std::to_string(t) + ": Nielsen reduced");
  }
  // The rotations a_i^-1..a_1^-1 ... a_n^-1..a_{i+1}^-1, 0 <= i <= n.
  for (int i = 0; i <= n; ++i) {
    const Word w = u.rotate(static_cast<std::size_t>(n - i));
    Word x = i < n ? run('a', i + 1, n, 1) : Word();
    x *= run('b', 1, n, 1);
    if (i > 0) x *= run('a', 1, i, 1);
    Word y = i > 0 ? run('a', i, 1, -1) : Word();
    y *= run('c', 1, n, 1);
    if (i < n) y *= run('a', n, i + 1, -1);
    if (!o.expect(commutator(x, y) == w, "phi0* solves the rotation i=" + std::to_string(i))) continue;
    const auto reps = solve_commutators(w, lib);
    if (reps.size() != 1) continue;
    o.expect(same_match(solution_class_key(true, 1, reps[0].rep, w), solution_class_key(true, 1, pair_solution(x, y), w)),
             "rotation i=" + std::to_string(i) + " class is that of phi0*");
    o.expect(3 * (x.size() + y.size()) == 2 * u.size(), "phi0* sum (2/3)|U2|");
    o.expect(is_nielsen_reduced_pair(x, y), "phi0* Nielsen reduced");
  }
  o.details << u.size() << " rotations, one class each; ";
}

// ---- criterion 9 ----

void bef_random(Outcome& o, FormLibrary& lib, Rng& rng) {
  const auto forms = lib.complete(true, 1);
  const auto abc = alphabet({"a", "b", "c"});
  int accepted = 0, drawn = 0;
  while (accepted < 200 && drawn < 20000) {
    ++drawn;
    const Word& f = forms[rng() % forms.size()].word;
    Substitution s;
    for (const auto& v : f.symbols()) s.set(v, random_word(rng, abc, 1 + rng() % 4));
    const Word u = cyclic_reduce(apply_substitution(s, f)).core;
    if (u.empty() || genus_plus(u, lib).value != 1) continue;
    ++accepted;
    const BefReport r = verify_bef(u, lib);
    if (!o.expect(r.part_i && r.part_ii, "bounds for " + format_word(u))) return;
  }
  o.details << accepted << " words from " << drawn << " draws; ";
  o.expect(accepted == 200, "200 genus-1 words generated");
}

// ---- criterion 10 ----

void reduction_random(Outcome& o, FormLibrary& lib, Rng& rng) {
  std::vector<WicksForm> pool;
  for (auto [orientable, genus] : {std::pair{true, 1}, {true, 2}, {false, 1}, {false, 2}, {false, 3}}) {
    for (auto& f : lib.complete(orientable, genus)) pool.push_back(f);
  }
  const auto abc = alphabet({"a", "b", "c"});
  int accepted = 0, drawn = 0, whitehead = 0, splits = 0, redundancy = 0;
  while (accepted < 200 && drawn < 100000) {
    ++drawn;
    const WicksForm& f = pool[rng() % pool.size()];
    const Word w = f.word.rotate(rng() % f.word.size());
    // Images in order of first occurrence; a new image may start by undoing
    // the end of the previous letter's image.
    Substitution psi;
    Word previous;
    for (const auto& l : w) {
      if (!psi.contains(l.symbol)) {
        Word spelled = rng() % 5 == 0 ? Word() : random_word(rng, abc, 1 + rng() % 3);
        if (!spelled.empty() && !previous.empty() && rng() % 2) {
          const std::size_t t = 1 + rng() % std::min<std::size_t>(previous.size(), 2);
          spelled = previous.subword(previous.size() - t, t).inverse() * spelled;
        }
        psi.set(l.symbol, l.sign > 0 ? spelled : spelled.inverse());
      }
      previous = psi.image(l);
    }
    const Word image = apply_substitution(psi, w);
    if (image.empty()) continue;
    const CyclicReduction cr = cyclic_reduce(image);
    Substitution phi;
    for (const auto& [v, img] : psi.assignments()) phi.set(v, cr.conjugator * img * cr.conjugator.inverse());
    // Keep only solutions at the genus of the form.
    const GenusResult gp = genus_plus(cr.core, lib);
    if (f.orientable) {
      if (gp.value != f.genus) continue;
    } else {
      if (genus_minus(cr.core, lib).value != f.genus || (gp.value && 2 * *gp.value < f.genus)) continue;
    }
    ++accepted;
    const std::string what = format_word(w) + " with " + format_substitution(phi);
    const ReductionResult r = reduce_solution(w, phi, cr.core);
    for (const auto& step : r.trace.steps) {
      o.expect(step.after < step.before, "measure decreases at every step for " + what);
      whitehead += step.kind == MoveKind::trivial_image_whitehead;
      splits += step.kind == MoveKind::cancellation_split;
      redundancy += step.kind == MoveKind::redundancy;
    }
    const QuadraticReport q = classify_quadratic(r.word);
    o.expect(q.is_quadratic && !find_redundant_pair(r.word, false), "output irredundant quadratic for " + what);
    o.expect(surface_data(r.word).chi == surface_data(w).chi, "Euler characteristic kept for " + what);
    o.expect(is_cancellation_free(r.word, r.psi, cr.core), "output cancellation-free for " + what);
    for (const auto& v : w.symbols()) {
      const Word back = apply_substitution(r.psi_extended, r.beta.apply(Word(Letter{v, 1})));
      o.expect(back == phi.image(v), "beta reconstructs the image of " + v.name() + " for " + what);
    }
    const TrackedAutomorphism gw = standard_form_automorphism(w), gr = standard_form_automorphism(r.word);
    const Word standard = standard_word(f.orientable, f.genus);
    o.expect(apply_substitution(phi, gw.unapply(standard)) == cr.core &&
                 apply_substitution(r.psi, gr.unapply(standard)) == cr.core,
             "gamma transports both solutions to the standard equation for " + what);
    if (!o.ok) return;
  }
  o.details << accepted << " solutions from " << drawn << " draws; moves: " << redundancy << " redundancy, " << splits
            << " split, " << whitehead << " whitehead; ";
  o.expect(accepted == 200, "200 solutions generated");
  o.expect(whitehead > 0 && splits > 0, "both trivial-image and cancellation moves exercised");
}

// ---- criterion 11 ----

void polynomial_bound_claim(Outcome& o) {
  const MatcherTally t = matcher_tally();
  o.details << t.calls << " matcher calls, " << t.total_candidates << " candidates, worst candidates/bound "
            << t.worst_ratio << "; ";
  o.expect(t.calls > 0, "matcher exercised");
  o.expect(t.violations == 0, "candidates never exceed k*C(n+k,k)");
}

// ---- criterion 12 ----

void oracle_small(Outcome& o, FormLibrary& lib) {
  const auto ab = alphabet({"a", "b"});
  std::vector<Word> level{Word()}, all{Word()};
  for (int len = 1; len <= 8; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (const auto& s : ab) {
        for (int sign : {1, -1}) {
          const Letter l{s, sign};
          if (!w.empty() && w[w.size() - 1].symbol == s && w[w.size() - 1].sign == -sign) continue;
          next.push_back(w * Word(l));
        }
      }
    }
    level = std::move(next);
    all.insert(all.end(), level.begin(), level.end());
  }
  int finite_plus = 0, finite_minus = 0;
  for (const auto& u : all) {
    const auto bp = brute_force_genus_plus(u), bm = brute_force_genus_minus(u);
    const auto sp = genus_plus(u, lib).value, sm = genus_minus(u, lib).value;
    finite_plus += bp.has_value();
    finite_minus += bm.has_value();
    if (!o.expect(bp == sp && bm == sm, "solver agrees with exhaustive search on " + format_word(u))) return;
  }
  o.details << all.size() << " words, " << finite_plus << " with finite genus+, " << finite_minus
            << " with finite genus-; ";
}

// ---- criterion 13 ----

void schutzenberger(Outcome& o, FormLibrary& lib, Rng& rng) {
  const auto abc = alphabet({"a", "b", "c"});
  int accepted = 0;
  while (accepted < 200) {
    const Word c = commutator(random_word(rng, abc, 1 + rng() % 5), random_word(rng, abc, 1 + rng() % 5));
    if (c.empty()) continue;
    ++accepted;
    const GenusResult g = genus_minus(c, lib);
    if (!o.expect(g.value != 1, format_word(c) + " is not a square")) return;
  }
  o.details << accepted << " commutators; ";
}

struct Claim {
  std::string id;
  int criterion;
  bool slow;
  std::function<void(Outcome&, FormLibrary&, Rng&)> run;
};

const std::vector<Claim>& suite() {
  static const std::vector<Claim> claims = {
      {"wicks-o1-count", 1, false, [](Outcome& o, FormLibrary& l, Rng&) { wicks_o1_count(o, l); }},
      {"wicks-n2-count", 1, false, [](Outcome& o, FormLibrary& l, Rng&) { wicks_n2_count(o, l); }},
      {"wicks-o2-maximal", 2, true, [](Outcome& o, FormLibrary& l, Rng&) { wicks_o2_maximal(o, l); }},
      {"genus-table", 3, false, [](Outcome& o, FormLibrary& l, Rng&) { genus_table(o, l); }},
      {"thm3.2-m2n3", 4, false, [](Outcome& o, FormLibrary& l, Rng&) { powers(o, l, 2, 3); }},
      {"thm3.2-m1n1", 4, false, [](Outcome& o, FormLibrary& l, Rng&) { powers(o, l, 1, 1); }},
      {"thm3.2-m3n2", 4, false, [](Outcome& o, FormLibrary& l, Rng&) { powers(o, l, 3, 2); }},
      {"thm3.3-n1n2", 5, false, [](Outcome& o, FormLibrary& l, Rng&) { squares(o, l, {1, 2}); }},
      {"thm3.3-n2n1n3", 5, false, [](Outcome& o, FormLibrary& l, Rng&) { squares(o, l, {2, 1, 3}); }},
      {"lemma4.1", 6, false, [](Outcome& o, FormLibrary& l, Rng&) { unique_class_commutator(o, l); }},
      {"three-squares-identity", 7, false, [](Outcome& o, FormLibrary&, Rng& r) { three_squares(o, r); }},
      {"two-squares-display", 7, false, [](Outcome& o, FormLibrary&, Rng&) { two_squares_display(o); }},
      {"lemma4.2-instance", 0, false, [](Outcome& o, FormLibrary&, Rng&) { free_basis_instance(o); }},
      {"thm3.1-u1-n1", 8, false, [](Outcome& o, FormLibrary& l, Rng&) { sharp_u1(o, l, 1); }},
      {"thm3.1-u1-n2", 8, false, [](Outcome& o, FormLibrary& l, Rng&) { sharp_u1(o, l, 2); }},
      {"thm3.1-u1-n3", 8, false, [](Outcome& o, FormLibrary& l, Rng&) { sharp_u1(o, l, 3); }},
      {"thm3.1-u2-n1", 8, false, [](Outcome& o, FormLibrary& l, Rng&) { sharp_u2(o, l, 1); }},
      {"thm3.1-u2-n2", 8, false, [](Outcome& o, FormLibrary& l, Rng&) { sharp_u2(o, l, 2); }},
      {"thm3.1-u2-n3", 8, false, [](Outcome& o, FormLibrary& l, Rng&) { sharp_u2(o, l, 3); }},
      {"thm3.1-bounds-random", 9, false, [](Outcome& o, FormLibrary& l, Rng& r) { bef_random(o, l, r); }},
      {"thm2.1-reduction-random", 10, false, [](Outcome& o, FormLibrary& l, Rng& r) { reduction_random(o, l, r); }},
      {"oracle-length8", 12, false, [](Outcome& o, FormLibrary& l, Rng&) { oracle_small(o, l); }},
      {"schutzenberger", 13, false, [](Outcome& o, FormLibrary& l, Rng& r) { schutzenberger(o, l, r); }},
      {"cor-polynomial-bound", 11, false, [](Outcome& o, FormLibrary&, Rng&) { polynomial_bound_claim(o); }},
  };
  return claims;
}

}  // namespace

std::vector<std::string> reproduction_suite_claims() {
  std::vector<std::string> out;
  for (const auto& c : suite()) out.push_back(c.id);
  return out;
}

VerificationReport run_reproduction_suite(const SuiteOptions& options, FormLibrary& library) {
  VerificationReport report;
  for (const auto& claim : suite()) {
    ClaimResult r;
    r.id = claim.id;
    r.criterion = claim.criterion;
    const auto start = std::chrono::steady_clock::now();
    if (claim.slow && options.skip_slow) {
      r.status = ClaimStatus::skipped;
      r.details = "skipped (--skip-slow)";
    } else {
      Outcome o;
      Rng rng(options.seed + std::hash<std::string>{}(claim.id) % 1000003);
      try {
        claim.run(o, library, rng);
        r.status = o.ok ? ClaimStatus::pass : ClaimStatus::fail;
        r.details = o.details.str();
      } catch (const TableUnavailable& e) {
        r.status = ClaimStatus::skipped;
        r.details = std::string("skipped: ") + e.what();
      } catch (const BudgetExceeded& e) {
        r.status = ClaimStatus::skipped;
        r.details = std::string("skipped: ") + e.what();
      } catch (const std::exception& e) {
        r.status = ClaimStatus::fail;
        r.details = o.details.str() + "error: " + e.what();
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.claims.push_back(std::move(r));
  }
  return report;
}

}  // namespace wicks
