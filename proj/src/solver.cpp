#include "wicks/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "wicks/error.hpp"

namespace wicks {

namespace {

Word var_word(const Symbol& v) { return Word(Letter{v, 1}); }

std::string failing_sum(const Word& u, bool need_even) {
  for (const auto& [s, e] : exponent_vector(u)) {
    if (need_even ? e % 2 != 0 : e != 0) {
      return "exponent sum of " + s.name() + " is " + std::to_string(e) + (need_even ? ", odd" : ", not 0");
    }
  }
  return {};
}

// First genus in [1, top] that has a matching Wicks form.
GenusResult scan(bool orientable, const Word& core, int top, FormLibrary& library) {
  GenusResult r;
  for (int g = 1; g <= top; ++g) {
    for (const auto& f : library.forms(orientable, g, core.size())) {
      auto ms = cancellation_free_matches(f.word, core);
      if (!ms.empty()) {
        r.value = g;
        r.certificate = dedupe_matches(ms).front();
        return r;
      }
    }
    r.exhausted_below.push_back(g);
  }
  return r;
}

std::vector<Symbol> standard_variables(bool orientable, int genus) {
  std::vector<Symbol> out;
  for (int i = 1; i <= genus; ++i) {
    out.push_back(standard_x(i));
    if (orientable) out.push_back(standard_y(i));
  }
  return out;
}

// Left multiplication of x_i or y_i by the other generator of its handle fixes
// [x1,y1]...[xg,yg]. Apply such moves, singly or in pairs so that a move that
// keeps the length can open a shortening one, while they shorten the
// representative.
void shorten(Substitution& rep, TrackedAutomorphism& gamma, int genus) {
  std::vector<TrackedAutomorphism> moves;
  for (int i = 1; i <= genus; ++i) {
    const Word x = var_word(standard_x(i)), y = var_word(standard_y(i));
    moves.push_back(TrackedAutomorphism::transvection(standard_x(i), y, Word()));
    moves.push_back(TrackedAutomorphism::transvection(standard_x(i), y.inverse(), Word()));
    moves.push_back(TrackedAutomorphism::transvection(standard_y(i), x, Word()));
    moves.push_back(TrackedAutomorphism::transvection(standard_y(i), x.inverse(), Word()));
  }
  std::vector<TrackedAutomorphism> sequences = moves;
  for (const auto& a : moves) {
    for (const auto& b : moves) sequences.push_back(compose(b, a));
  }
  auto total = [](const Substitution& s) {
    std::size_t n = 0;
    for (const auto& [v, img] : s.assignments()) n += img.size();
    return n;
  };
  for (;;) {
    std::size_t best = total(rep);
    const TrackedAutomorphism* chosen = nullptr;
    Substitution chosen_rep;
    for (const auto& m : sequences) {
      Substitution cand = compose(m.forward(), rep);
      if (const std::size_t t = total(cand); t < best) {
        best = t;
        chosen = &m;
        chosen_rep = std::move(cand);
      }
    }
    if (!chosen) return;
    rep = std::move(chosen_rep);
    gamma = compose(gamma, chosen->inverse());
  }
}

std::vector<SolutionClassRep> representatives(bool orientable, int genus, const Word& u, FormLibrary& library) {
  const auto cr = cyclic_reduce(u);
  const Word& core = cr.core;
  const Word standard = standard_word(orientable, genus);
  std::vector<SolutionClassRep> out;
  std::vector<Match> keys;  // class key of out[i]
  for (const auto& f : library.forms(orientable, genus, core.size())) {
    for (const auto& m : dedupe_matches(cancellation_free_matches(f.word, core))) {
      SolutionClassRep r;
      r.orientable = orientable;
      r.genus = genus;
      const Match pm = preferred_alignment(m);
      const auto [letter, offset] = pm.start_point();
      AlignedWord aligned = split_for_alignment(pm.form, pm.assignment, letter, offset);
      if (!is_cancellation_free(aligned.word, aligned.assignment, core)) {
        throw std::logic_error("aligned word does not spell U: " + format_word(aligned.word));
      }
      r.gamma = standard_form_automorphism(aligned.word);
      for (const auto& s : standard_variables(orientable, genus)) {
        r.rep.set(s, apply_substitution(aligned.assignment, r.gamma.unapply(var_word(s))));
      }
      if (orientable) shorten(r.rep, r.gamma, genus);
      r.match = m;
      // A cyclic match whose aligned word is redundant as an ordinary word
      // reduces to another match; keep one representative per class key,
      // preferring the rep produced by the key's own match.
      const Match key = solution_class_key(orientable, genus, r.rep, core);
      auto seen = std::find_if(keys.begin(), keys.end(), [&](const Match& k) { return same_match(k, key); });
      if (seen != keys.end()) {
        SolutionClassRep& kept = out[static_cast<std::size_t>(seen - keys.begin())];
        if (!same_match(*kept.match, key) && same_match(m, key)) {
          // fall through and replace `kept` below
        } else {
          continue;
        }
      }
      if (!cr.conjugator.empty()) {
        Substitution conj;
        for (const auto& [v, img] : r.rep.assignments()) conj.set(v, cr.conjugator.inverse() * img * cr.conjugator);
        r.rep = std::move(conj);
      }
      if (apply_substitution(r.rep, standard) != u) {
        throw std::logic_error("representative does not solve the equation");
      }
      r.split = aligned.split;
      r.aligned_word = std::move(aligned.word);
      r.aligned_assignment = std::move(aligned.assignment);
      r.conjugator = cr.conjugator;
      r.fingerprint = folded_graph(r.images());
      if (seen != keys.end()) {
        out[static_cast<std::size_t>(seen - keys.begin())] = std::move(r);
      } else {
        keys.push_back(key);
        out.push_back(std::move(r));
      }
    }
  }
  verify_class_distinctness(out);
  return out;
}

}  // namespace

GenusResult genus_plus(const Word& u, FormLibrary& library) {
  GenusResult r;
  if (u.empty()) {
    r.value = 0;
    return r;
  }
  if (!in_commutator_subgroup(u)) {
    r.reason = failing_sum(u, false);
    return r;
  }
  const Word core = cyclic_reduce(u).core;
  r = scan(true, core, static_cast<int>(core.size() / 4), library);
  if (r.infinite()) throw std::logic_error("genus_plus: no orientable form matches " + format_word(u));
  return r;
}

// genus- by scanning nonorientable forms. With h = genus+(U) finite, the
// classification applies at every g <= 2h (there genus+ >= g/2), so a scan of
// g = 1..2h without a match proves genus- > 2h; genus- <= 2h+1 always holds
// for U in H', so the value is then 2h+1. Outside H' genus+ is infinite and
// every scanned genus is conclusive.
GenusResult genus_minus(const Word& u, FormLibrary& library) {
  GenusResult r;
  if (u.empty()) {
    r.value = 0;
    return r;
  }
  if (!in_square_subgroup(u)) {
    r.reason = failing_sum(u, true);
    return r;
  }
  const Word core = cyclic_reduce(u).core;
  if (!in_commutator_subgroup(u)) {
    r = scan(false, core, static_cast<int>(core.size() / 2), library);
    if (r.infinite()) throw std::logic_error("genus_minus: no nonorientable form matches " + format_word(u));
    return r;
  }
  const int h = *genus_plus(u, library).value;
  r = scan(false, core, 2 * h, library);
  if (r.infinite()) {
    r.value = 2 * h + 1;
    r.forced = true;
    r.reason = "no nonorientable form of genus <= " + std::to_string(2 * h) + " matches; genus- <= 2 genus+ + 1 = " +
               std::to_string(2 * h + 1);
  }
  return r;
}

std::string to_string(Distinctness d) {
  return d == Distinctness::resolved_distinct ? "resolved-distinct" : "unresolved";
}

std::vector<Symbol> SolutionClassRep::variables() const { return standard_variables(orientable, genus); }

std::vector<Word> SolutionClassRep::images() const {
  std::vector<Word> out;
  for (const auto& v : variables()) out.push_back(rep.image(v));
  return out;
}

std::vector<SolutionClassRep> solve_commutators(const Word& u, FormLibrary& library) {
  if (u.empty()) throw DomainError("solve_commutators: U must be nontrivial");
  if (!in_commutator_subgroup(u)) throw NoSolution("U is not in the commutator subgroup: " + failing_sum(u, false));
  const int g = *genus_plus(u, library).value;
  return representatives(true, g, u, library);
}

SquaresSolution solve_squares(const Word& u, FormLibrary& library) {
  if (u.empty()) throw DomainError("solve_squares: U must be nontrivial");
  if (!in_square_subgroup(u)) throw NoSolution("U is not a product of squares: " + failing_sum(u, true));
  const GenusResult gm = genus_minus(u, library);
  SquaresSolution out;
  out.genus = *gm.value;
  if (!gm.forced) {
    out.classes = representatives(false, out.genus, u, library);
    return out;
  }
  // genus+ = h < genus/2: one witness from a commutator solution, using
  // [P,Q] = (P^-1)^2 (P Q^-1)^2 Q^2 and then s^2 [y,z] -> s^2 z^2 y^2.
  out.complete = false;
  const SolutionClassRep base = solve_commutators(u, library).front();
  std::vector<Word> squares;
  {
    const Word p = base.rep.image(standard_x(1)), q = base.rep.image(standard_y(1));
    squares = {p.inverse(), p * q.inverse(), q};
  }
  const Symbol s = Symbol::variable("s"), y = Symbol::variable("y"), z = Symbol::variable("z");
  const TrackedAutomorphism exchange = square_handle_exchange(s, y, z);
  for (int i = 2; i <= base.genus; ++i) {
    Substitution phi{{s, squares.back()}, {y, base.rep.image(standard_x(i))}, {z, base.rep.image(standard_y(i))}};
    squares.back() = apply_substitution(phi, exchange.unapply(var_word(s)));
    squares.push_back(apply_substitution(phi, exchange.unapply(var_word(z))));
    squares.push_back(apply_substitution(phi, exchange.unapply(var_word(y))));
  }
  SolutionClassRep r;
  r.orientable = false;
  r.genus = out.genus;
  for (std::size_t i = 0; i < squares.size(); ++i) r.rep.set(standard_x(static_cast<int>(i) + 1), squares[i]);
  if (apply_substitution(r.rep, standard_nonorientable(r.genus)) != u) {
    throw std::logic_error("three-squares witness does not solve the equation");
  }
  r.fingerprint = folded_graph(r.images());
  r.distinctness = Distinctness::resolved_distinct;
  out.classes.push_back(std::move(r));
  return out;
}

void verify_class_distinctness(std::vector<SolutionClassRep>& reps) {
  for (auto& r : reps) r.distinctness = Distinctness::resolved_distinct;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (reps[i].fingerprint == reps[j].fingerprint) {
        reps[i].distinctness = Distinctness::unresolved;
        reps[j].distinctness = Distinctness::unresolved;
      }
    }
  }
}

bool same_match(const Match& a, const Match& b) { return !match_less(a, b) && !match_less(b, a); }

Match solution_class_key(bool orientable, int genus, const Substitution& phi, const Word& u) {
  const Word standard = standard_word(orientable, genus);
  const auto red = reduce_solution(standard, restrict_to(phi, standard.symbols()), u);
  Word w = red.word;
  Substitution psi = red.psi;
  const std::size_t n = u.size();
  std::size_t offset = 0;  // position of U where the image of w[0] starts

  auto advance = [&](std::size_t letters) {
    for (std::size_t j = 0; j < letters; ++j) offset += psi.image(w[j]).size();
    offset %= n;
  };

  // Blocks that are redundant only cyclically become redundant as ordinary
  // words after a rotation; merge them like the redundancy move.
  while (auto pair = find_redundant_pair(w, true)) {
    const auto [p, q] = *pair;
    std::size_t i = 0;
    while (!(w[i] == p && w[(i + 1) % w.size()] == q)) ++i;
    advance(i);
    w = w.rotate(i);
    const TrackedAutomorphism move = p.sign > 0 ? TrackedAutomorphism::transvection(p.symbol, Word(), Word(q.inverse()))
                                                : TrackedAutomorphism::transvection(p.symbol, Word(q), Word());
    w = move.apply(w);
    psi = restrict_to(compose(move.backward(), psi), w.symbols());
  }

  const CanonicalLabeling cl = canonical_labeling(w);
  advance(cl.rotation);
  Match m;
  m.form = cl.word;
  for (const auto& [y, l] : cl.relabel) {
    const Word img = psi.image(y);
    m.assignment.set(l.symbol, l.sign > 0 ? img : img.inverse());
  }
  std::size_t pos = offset;
  for (const auto& l : m.form) {
    m.cuts.push_back(pos % n);
    m.lengths.push_back(m.assignment.image(l).size());
    pos += m.lengths.back();
  }
  m.rotation_offset = offset;
  return dedupe_matches({m}).front();
}

}  // namespace wicks
