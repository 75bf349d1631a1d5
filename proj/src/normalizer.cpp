#include "wicks/normalizer.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "wicks/error.hpp"
#include "wicks/surface.hpp"

namespace wicks {

namespace {

Substitution prune_identity(const Substitution& s) {
  Substitution out;
  for (const auto& [v, img] : s.assignments()) {
    if (img.size() == 1 && img[0] == Letter{v, 1}) continue;
    out.set(v, img);
  }
  return out;
}

Word var_word(const Symbol& v, int sign = 1) { return Word(Letter{v, sign}); }

}  // namespace

TrackedAutomorphism::TrackedAutomorphism(Substitution forward, Substitution backward)
    : forward_(prune_identity(forward)), backward_(prune_identity(backward)) {
  for (const auto& [v, img] : forward_.assignments()) support_.insert(v);
  for (const auto& [v, img] : backward_.assignments()) support_.insert(v);
}

TrackedAutomorphism TrackedAutomorphism::from_maps(Substitution forward, Substitution backward) {
  TrackedAutomorphism t(std::move(forward), std::move(backward));
  for (const auto& v : t.support_) {
    const Word x = var_word(v);
    if (t.apply(t.unapply(x)) != x || t.unapply(t.apply(x)) != x) {
      throw DomainError("tracked automorphism: maps are not mutually inverse on " + v.name());
    }
  }
  return t;
}

TrackedAutomorphism TrackedAutomorphism::transvection(const Symbol& x, const Word& left, const Word& right) {
  if (left.occurrences(x) || right.occurrences(x)) {
    throw DomainError("transvection of " + x.name() + " by a word involving it");
  }
  Substitution f, b;
  f.set(x, left * var_word(x) * right);
  b.set(x, left.inverse() * var_word(x) * right.inverse());
  return TrackedAutomorphism(std::move(f), std::move(b));
}

TrackedAutomorphism TrackedAutomorphism::inversion(const Symbol& x) {
  Substitution f;
  f.set(x, var_word(x, -1));
  return TrackedAutomorphism(f, f);
}

TrackedAutomorphism TrackedAutomorphism::conjugation(const std::set<Symbol>& vars, const Word& p) {
  for (const auto& l : p) {
    if (!vars.count(l.symbol)) throw DomainError("conjugation by a word outside the conjugated variables");
  }
  Substitution f, b;
  for (const auto& v : vars) {
    f.set(v, p.inverse() * var_word(v) * p);
    b.set(v, p * var_word(v) * p.inverse());
  }
  return TrackedAutomorphism(std::move(f), std::move(b));
}

TrackedAutomorphism TrackedAutomorphism::renaming(const std::map<Symbol, Symbol>& names) {
  std::set<Symbol> domain, image;
  for (const auto& [from, to] : names) {
    if (!image.insert(to).second) throw DomainError("renaming is not injective at " + to.name());
    domain.insert(from);
  }
  // The unused targets are the image points no one maps from; pair them in
  // order with the domain points no one maps to.
  std::vector<Symbol> sources, targets;
  for (const auto& s : image) {
    if (!domain.count(s)) sources.push_back(s);
  }
  for (const auto& s : domain) {
    if (!image.count(s)) targets.push_back(s);
  }
  Substitution f, b;
  auto bind = [&](const Symbol& from, const Symbol& to) {
    f.set(from, var_word(to));
    b.set(to, var_word(from));
  };
  for (const auto& [from, to] : names) bind(from, to);
  for (std::size_t i = 0; i < sources.size(); ++i) bind(sources[i], targets[i]);
  return TrackedAutomorphism(std::move(f), std::move(b));
}

TrackedAutomorphism TrackedAutomorphism::inverse() const { return TrackedAutomorphism(backward_, forward_); }

TrackedAutomorphism compose(const TrackedAutomorphism& first, const TrackedAutomorphism& second) {
  return TrackedAutomorphism(compose(first.forward_, second.forward_), compose(second.backward_, first.backward_));
}

Symbol standard_x(int i) { return Symbol::variable("x" + std::to_string(i)); }
Symbol standard_y(int i) { return Symbol::variable("y" + std::to_string(i)); }

Word standard_orientable(int genus) {
  Word w;
  for (int i = 1; i <= genus; ++i) w *= commutator(var_word(standard_x(i)), var_word(standard_y(i)));
  return w;
}

Word standard_nonorientable(int genus) {
  Word w;
  for (int i = 1; i <= genus; ++i) w *= var_word(standard_x(i)).pow(2);
  return w;
}

Word standard_word(bool orientable, int genus) {
  return orientable ? standard_orientable(genus) : standard_nonorientable(genus);
}

TrackedAutomorphism square_handle_exchange(const Symbol& s, const Symbol& y, const Symbol& z) {
  using T = TrackedAutomorphism;
  T a = T::transvection(s, Word(), var_word(y));
  a = compose(a, T::transvection(y, Word(), var_word(z) * var_word(s, -1)));
  a = compose(a, T::transvection(z, Word(), var_word(s)));
  a = compose(a, T::transvection(s, Word(), var_word(z).pow(-2) * var_word(y).pow(-2)));
  a = compose(a, T::inversion(y));
  return compose(a, T::inversion(z));
}

namespace {

// Classical surface-word normalization. The image of w is kept as
// block * rest, where block is a product of normalized pieces (squares and
// commutators) over variables not occurring in rest; rest is treated as a
// cyclic word, rotated by conjugating its own variables.
class StandardForm {
 public:
  explicit StandardForm(const Word& w) : current_(w) {}

  TrackedAutomorphism run() {
    const auto sd = surface_data(current_);
    reduce_rest();
    while (has_square_pair()) extract_crosscap();
    while (rest_size() > 0) extract_handle();

    std::map<Symbol, Symbol> names;
    int next = 1;
    for (const auto& p : pieces_) {
      if (p.handle) {
        names[p.a] = standard_x(next);
        names[p.b] = standard_y(next);
      } else {
        names[p.a] = standard_x(next);
      }
      ++next;
    }
    step(TrackedAutomorphism::renaming(names));
    const Word expected = standard_word(sd.orientable, sd.genus);
    if (current_ != expected) {
      throw std::logic_error("standard form normalization produced " + format_word(current_) + ", expected " +
                             format_word(expected));
    }
    return gamma_;
  }

 private:
  struct Piece {
    bool handle;
    Symbol a, b;
  };

  std::size_t rest_size() const { return current_.size() - block_length_; }
  Word rest() const { return current_.subword(block_length_, rest_size()); }

  void step(const TrackedAutomorphism& m) {
    gamma_ = compose(gamma_, m);
    current_ = m.apply(current_);
  }

  void rotate_rest(std::size_t j) {
    if (j == 0) return;
    const Word r = rest();
    step(TrackedAutomorphism::conjugation(r.symbols(), r.subword(0, j)));
  }

  void reduce_rest() {
    const Word r = rest();
    const auto cr = cyclic_reduce(r);
    if (!cr.conjugator.empty()) step(TrackedAutomorphism::conjugation(r.symbols(), cr.conjugator.inverse()));
  }

  // Position of the other occurrence of the variable at position i.
  static std::size_t partner(const Word& r, std::size_t i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j != i && r[j].symbol == r[i].symbol) return j;
    }
    throw std::logic_error("standard form normalization: word is not quadratic");
  }

  bool has_square_pair() const {
    const Word r = rest();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[partner(r, i)].sign == r[i].sign) return true;
    }
    return false;
  }

  // rest = x B x D  ->  x x B^-1 D via x -> x B^-1.
  void extract_crosscap() {
    Word r = rest();
    std::size_t i = 0;
    while (r[partner(r, i)].sign != r[i].sign) ++i;
    const Symbol x = r[i].symbol;
    if (r[i].sign < 0) step(TrackedAutomorphism::inversion(x));
    rotate_rest(i);
    r = rest();
    const std::size_t j = partner(r, 0);
    step(TrackedAutomorphism::transvection(x, Word(), r.subword(1, j - 1).inverse()));
    block_length_ += 2;
    pieces_.push_back({false, x, x});
    reduce_rest();
  }

  // rest = x B y C x^-1 D y^-1 E is brought to x^-1 y^-1 x y E' by three
  // transvections, a rotation and two inversions.
  void extract_handle() {
    Word r = rest();
    std::size_t i = 0, j = 0;
    bool found = false;
    for (i = 0; i < r.size() && !found; ++i) {
      const std::size_t k = partner(r, i);
      if (k < i) continue;
      for (j = i + 1; j < k; ++j) {
        if (partner(r, j) > k) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("standard form normalization: no crossing pair in " + format_word(r));
    const Symbol x = r[i].symbol;
    const Symbol y = r[j].symbol;
    if (r[i].sign < 0) step(TrackedAutomorphism::inversion(x));
    if (r[j].sign < 0) step(TrackedAutomorphism::inversion(y));
    rotate_rest(i);

    auto position = [this](const Letter& l) {
      const Word w = rest();
      return static_cast<std::size_t>(std::find(w.begin(), w.end(), l) - w.begin());
    };
    r = rest();
    step(TrackedAutomorphism::transvection(x, Word(), r.subword(1, position({y, 1}) - 1).inverse()));
    r = rest();
    step(TrackedAutomorphism::transvection(y, Word(), r.subword(2, position({x, -1}) - 2).inverse()));
    r = rest();
    const Word d = r.subword(3, position({y, -1}) - 3);
    step(TrackedAutomorphism::transvection(x, d, Word()));
    rotate_rest(d.size());
    step(TrackedAutomorphism::inversion(x));
    step(TrackedAutomorphism::inversion(y));

    if (!pieces_.empty() && !pieces_.back().handle) {
      step(square_handle_exchange(pieces_.back().a, x, y));
      pieces_.push_back({false, y, y});
      pieces_.push_back({false, x, x});
    } else {
      pieces_.push_back({true, x, y});
    }
    block_length_ += 4;
    reduce_rest();
  }

  Word current_;
  TrackedAutomorphism gamma_;
  std::size_t block_length_ = 0;
  std::vector<Piece> pieces_;
};

}  // namespace

TrackedAutomorphism standard_form_automorphism(const Word& w) {
  if (!classify_quadratic(w).is_quadratic) throw DomainError("standard form of a non-quadratic word: " + format_word(w));
  return StandardForm(w).run();
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::redundancy:
      return "redundancy";
    case MoveKind::cancellation_split:
      return "cancellation_split";
    case MoveKind::trivial_image_whitehead:
      return "trivial_image_whitehead";
  }
  return "?";
}

Measure solution_measure(const Word& w, const Substitution& psi) {
  Measure m;
  for (const auto& v : w.symbols()) {
    m.total_length += psi.image(v).size();
    ++m.variables;
  }
  return m;
}

bool is_cancellation_free(const Word& w, const Substitution& psi, const Word& u) {
  std::vector<Letter> spelled;
  for (const auto& l : w) {
    const Word img = psi.image(l);
    if (img.empty()) return false;
    spelled.insert(spelled.end(), img.begin(), img.end());
  }
  return spelled == u.letters();
}

namespace {

class Reducer {
 public:
  Reducer(const Word& w, const Substitution& psi, const Word& u) : u_(u), word_(w) {
    for (const auto& v : w.symbols()) psi_.set(v, psi.image(v));
    for (const auto& v : w.symbols()) taken_.insert(v);
  }

  ReductionResult run() {
    for (;;) {
      std::optional<std::pair<MoveKind, TrackedAutomorphism>> move;
      if (auto pair = find_redundant_pair(word_, false)) {
        move.emplace(MoveKind::redundancy, redundancy_move(pair->first, pair->second));
      } else if (auto x = trivial_variable()) {
        move.emplace(MoveKind::trivial_image_whitehead, whitehead_move(*x));
      } else if (auto split = cancellation_move()) {
        move.emplace(MoveKind::cancellation_split, std::move(*split));
      } else {
        break;
      }
      apply(move->first, move->second);
    }
    ReductionResult out;
    out.word = word_;
    out.psi = restrict_to(psi_, word_.symbols());
    out.psi_extended = psi_;
    out.beta = beta_;
    out.trace = std::move(trace_);
    return out;
  }

 private:
  void apply(MoveKind kind, const TrackedAutomorphism& move) {
    const Measure before = solution_measure(word_, psi_);
    const int chi_before = surface_data(word_).chi;
    Word next = move.apply(word_);
    Substitution next_psi = compose(move.backward(), psi_);
    const Measure after = solution_measure(next, next_psi);
    if (!classify_quadratic(next).is_quadratic) {
      throw std::logic_error(to_string(kind) + " move produced a non-quadratic word " + format_word(next));
    }
    if (surface_data(next).chi != chi_before) {
      throw HypothesisViolation(to_string(kind) + " move changed the Euler characteristic");
    }
    if (!(after < before)) throw std::logic_error(to_string(kind) + " move did not decrease the measure");
    if (apply_substitution(next_psi, next) != u_) {
      throw std::logic_error(to_string(kind) + " move lost the solution");
    }
    word_ = std::move(next);
    psi_ = std::move(next_psi);
    beta_ = compose(beta_, move);
    trace_.steps.push_back({kind, move, before, after, word_});
  }

  // Letters p, q occurring only in blocks (pq)^{+-1}: p -> p q^-1.
  static TrackedAutomorphism redundancy_move(const Letter& p, const Letter& q) {
    const Word qi = Word(q.inverse());
    if (p.sign > 0) return TrackedAutomorphism::transvection(p.symbol, Word(), qi);
    return TrackedAutomorphism::transvection(p.symbol, qi.inverse(), Word());
  }

  std::optional<Symbol> trivial_variable() const {
    for (const auto& v : word_.symbols()) {
      if (psi_.image(v).empty()) return v;
    }
    return std::nullopt;
  }

  // The Whitehead automorphism read off the star of the initial vertex of
  // e_x; it agrees with killing x.
  TrackedAutomorphism whitehead_move(const Symbol& x) const {
    const auto cs = corner_structure(word_);
    const auto [tail, head] = cs.edge_ends.at(x);
    if (tail == head) {
      throw HypothesisViolation("trivial_image_whitehead: the edge of " + x.name() +
                                " is a loop on the surface, so removing it lowers the genus");
    }
    const Word xw = var_word(x);
    Substitution f, b;
    for (const auto& [y, ends] : cs.edge_ends) {
      if (y == x) continue;
      const bool starts = ends.first == tail;
      const bool ends_here = ends.second == tail;
      const Word yw = var_word(y);
      if (starts && ends_here) {
        f.set(y, xw * yw * xw.inverse());
        b.set(y, xw.inverse() * yw * xw);
      } else if (starts) {
        f.set(y, xw * yw);
        b.set(y, xw.inverse() * yw);
      } else if (ends_here) {
        f.set(y, yw * xw.inverse());
        b.set(y, yw * xw);
      }
    }
    TrackedAutomorphism beta = TrackedAutomorphism::from_maps(std::move(f), std::move(b));
    Substitution kill;
    kill.set(x, Word());
    const Word target = apply_substitution(kill, word_);
    const Word image = beta.apply(word_);
    if (image == target) return beta;
    // As ordinary words the two may differ by conjugation by x.
    std::set<Symbol> others = word_.symbols();
    others.erase(x);
    for (int e : {1, -1}) {
      if (image == xw.pow(e) * target * xw.pow(-e)) {
        Substitution cf, cb;
        for (const auto& y : others) {
          cf.set(y, xw.pow(-e) * var_word(y) * xw.pow(e));
          cb.set(y, xw.pow(e) * var_word(y) * xw.pow(-e));
        }
        return compose(beta, TrackedAutomorphism::from_maps(std::move(cf), std::move(cb)));
      }
    }
    throw std::logic_error("trivial_image_whitehead: star automorphism does not kill " + x.name());
  }

  Symbol fresh() {
    for (;;) {
      Symbol z = Symbol::variable("z" + std::to_string(++fresh_counter_));
      if (taken_.insert(z).second) return z;
    }
  }

  // Junction p q of W with (p psi)(q psi) = A B B^-1 C, B maximal:
  // p -> p z, q -> z^-1 q with z psi = B. A square p p uses p -> z^-1 p z.
  std::optional<TrackedAutomorphism> cancellation_move() {
    for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
      const Letter p = word_[i];
      const Letter q = word_[i + 1];
      const Word pw = psi_.image(p);
      const Word qw = psi_.image(q);
      std::size_t c = 0;
      while (c < pw.size() && c < qw.size() && pw[pw.size() - 1 - c].is_inverse_of(qw[c])) ++c;
      if (c == 0) continue;
      const Symbol z = fresh();
      psi_.set(z, pw.subword(pw.size() - c, c));
      const Word zw = var_word(z);
      if (p.symbol == q.symbol) {
        return TrackedAutomorphism::from_maps(Substitution{{p.symbol, zw.inverse() * var_word(p.symbol) * zw}},
                                              Substitution{{p.symbol, zw * var_word(p.symbol) * zw.inverse()}});
      }
      Substitution f, b;
      // p -> p z
      if (p.sign > 0) {
        f.set(p.symbol, var_word(p.symbol) * zw);
        b.set(p.symbol, var_word(p.symbol) * zw.inverse());
      } else {
        f.set(p.symbol, zw.inverse() * var_word(p.symbol));
        b.set(p.symbol, zw * var_word(p.symbol));
      }
      // q -> z^-1 q
      if (q.sign > 0) {
        f.set(q.symbol, zw.inverse() * var_word(q.symbol));
        b.set(q.symbol, zw * var_word(q.symbol));
      } else {
        f.set(q.symbol, var_word(q.symbol) * zw);
        b.set(q.symbol, var_word(q.symbol) * zw.inverse());
      }
      return TrackedAutomorphism::from_maps(std::move(f), std::move(b));
    }
    return std::nullopt;
  }

  Word u_;
  Word word_;
  Substitution psi_;
  TrackedAutomorphism beta_;
  ReductionTrace trace_;
  std::set<Symbol> taken_;
  int fresh_counter_ = 0;
};

}  // namespace

ReductionResult reduce_solution(const Word& w, const Substitution& psi, const Word& u) {
  if (!classify_quadratic(w).is_quadratic) throw DomainError("reduce_solution: word is not quadratic");
  if (u.empty()) throw DomainError("reduce_solution: U must be nontrivial");
  if (!u.is_cyclically_reduced()) throw DomainError("reduce_solution: U must be cyclically reduced");
  if (apply_substitution(psi, w) != u) throw DomainError("reduce_solution: psi is not a solution");
  return Reducer(w, psi, u).run();
}

}  // namespace wicks
