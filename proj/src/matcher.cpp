#include "wicks/matcher.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>

#include "wicks/error.hpp"
#include "wicks/surface.hpp"

namespace wicks {

namespace {

std::mutex tally_mutex;
MatcherTally tally;

void record(const MatchStats& s) {
  std::lock_guard lock(tally_mutex);
  ++tally.calls;
  tally.total_candidates += s.candidates;
  if (s.candidates > s.bound) ++tally.violations;
  if (s.bound > 0) {
    tally.worst_ratio = std::max(tally.worst_ratio, static_cast<double>(s.candidates) / static_cast<double>(s.bound));
  }
}

bool assignment_less(const Substitution& a, const Substitution& b) {
  return std::lexicographical_compare(a.assignments().begin(), a.assignments().end(), b.assignments().begin(),
                                      b.assignments().end());
}

class Search {
 public:
  Search(const Word& form, const Word& u) : form_(form), u_(u), k_(form.size()), n_(u.size()) {
    std::map<Symbol, int> ids;
    for (const auto& l : u) {
      auto [it, ins] = ids.emplace(l.symbol, static_cast<int>(ids.size()) + 1);
      ucode_.push_back(l.sign * it->second);
    }
    std::map<Symbol, int> vars;
    for (const auto& l : form) {
      auto [it, ins] = vars.emplace(l.symbol, static_cast<int>(vars.size()));
      fvar_.push_back(it->second);
      fsign_.push_back(l.sign);
    }
    bound_start_.assign(vars.size(), -1);
    bound_len_.assign(vars.size(), 0);
    bound_sign_.assign(vars.size(), 0);
    cuts_.resize(k_);
    lens_.resize(k_);
  }

  std::vector<Match> run(MatchStats& stats) {
    stats_ = &stats;
    for (std::size_t s = 0; s < n_; ++s) {
      offset_ = s;
      extend(0, s, 0);
    }
    return std::move(out_);
  }

 private:
  int at(std::size_t pos) const { return ucode_[pos % n_]; }

  // Does the occurrence at `pos` (sign `sign`) spell the same variable image
  // as the bound occurrence?
  bool agrees(std::size_t var, int sign, std::size_t pos) const {
    const std::size_t len = bound_len_[var];
    const std::size_t start = static_cast<std::size_t>(bound_start_[var]);
    if (sign == bound_sign_[var]) {
      for (std::size_t i = 0; i < len; ++i) {
        if (at(pos + i) != at(start + i)) return false;
      }
    } else {
      for (std::size_t i = 0; i < len; ++i) {
        if (at(pos + i) != -at(start + len - 1 - i)) return false;
      }
    }
    return true;
  }

  void extend(std::size_t j, std::size_t pos, std::size_t consumed) {
    if (j == k_) {
      if (consumed == n_) emit();
      return;
    }
    const std::size_t var = static_cast<std::size_t>(fvar_[j]);
    const int sign = fsign_[j];
    const bool last = j + 1 == k_;
    cuts_[j] = pos % n_;
    if (bound_start_[var] >= 0) {
      const std::size_t len = bound_len_[var];
      if (consumed + len + (k_ - j - 1) > n_) return;
      if (last) {
        if (consumed + len != n_) return;
        ++stats_->candidates;
      }
      if (!agrees(var, sign, pos)) return;
      lens_[j] = len;
      extend(j + 1, pos + len, consumed + len);
      return;
    }
    const std::size_t room = n_ - consumed - (k_ - j - 1);
    for (std::size_t len = last ? room : 1; len <= room; ++len) {
      if (last) ++stats_->candidates;
      bound_start_[var] = static_cast<long>(pos % n_);
      bound_len_[var] = len;
      bound_sign_[var] = sign;
      lens_[j] = len;
      extend(j + 1, pos + len, consumed + len);
    }
    bound_start_[var] = -1;
  }

  void emit() {
    Match m;
    m.form = form_;
    m.rotation_offset = offset_;
    m.cuts = cuts_;
    m.lengths = lens_;
    for (std::size_t j = 0; j < k_; ++j) {
      const Letter& l = form_[j];
      if (m.assignment.contains(l.symbol)) continue;
      Word spelled = u_.cyclic_subword(cuts_[j], lens_[j]);
      m.assignment.set(l.symbol, l.sign > 0 ? spelled : spelled.inverse());
    }
    out_.push_back(std::move(m));
  }

  const Word& form_;
  const Word& u_;
  std::size_t k_, n_;
  std::vector<int> ucode_;
  std::vector<int> fvar_, fsign_;
  std::vector<long> bound_start_;
  std::vector<std::size_t> bound_len_;
  std::vector<int> bound_sign_;
  std::vector<std::size_t> cuts_, lens_;
  std::size_t offset_ = 0;
  MatchStats* stats_ = nullptr;
  std::vector<Match> out_;
};

}  // namespace

std::size_t Match::target_length() const {
  std::size_t n = 0;
  for (auto l : lengths) n += l;
  return n;
}

std::pair<std::size_t, std::size_t> Match::start_point() const {
  const std::size_t n = target_length();
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const std::size_t t = (n - cuts[j]) % n;
    if (t < lengths[j]) return {j, t};
  }
  throw DomainError("match does not cover position 0");
}

std::vector<Letter> Match::spelled() const {
  std::vector<Letter> out;
  for (std::size_t j = 0; j < form.size(); ++j) {
    const Word img = image_of_letter(j);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool match_less(const Match& a, const Match& b) {
  if (assignment_less(a.assignment, b.assignment)) return true;
  if (assignment_less(b.assignment, a.assignment)) return false;
  if (a.rotation_offset != b.rotation_offset) return a.rotation_offset < b.rotation_offset;
  if (a.form != b.form) return a.form < b.form;
  return a.lengths < b.lengths;
}

MatcherTally matcher_tally() {
  std::lock_guard lock(tally_mutex);
  return tally;
}

void reset_matcher_tally() {
  std::lock_guard lock(tally_mutex);
  tally = {};
}

std::uint64_t polynomial_bound(std::size_t n, std::size_t k) {
  // k * C(n+k, k), computed incrementally; C(n+i, i) = C(n+i-1, i-1) (n+i) / i.
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n + i) / i;
    if (c > cap) return cap;
  }
  c *= k;
  return c > cap ? cap : static_cast<std::uint64_t>(c);
}

std::vector<Match> cancellation_free_matches(const Word& form, const Word& u, MatchStats* stats) {
  if (u.empty()) throw DomainError("cancellation_free_matches: U must be nontrivial");
  if (!u.is_cyclically_reduced()) throw DomainError("cancellation_free_matches: U must be cyclically reduced");
  if (!classify_quadratic(form).is_quadratic) throw DomainError("cancellation_free_matches: form is not quadratic");
  MatchStats local;
  local.bound = polynomial_bound(u.size(), form.size());
  std::vector<Match> out;
  if (form.size() <= u.size() && !form.empty()) out = Search(form, u).run(local);
  record(local);
  if (stats) *stats = local;
  return out;
}

std::vector<Match> cancellation_free_matches(const WicksForm& form, const CyclicWord& u, MatchStats* stats) {
  return cancellation_free_matches(form.word, u.word(), stats);
}

std::vector<Match> match_orbit(const Match& m) {
  const std::size_t k = m.form.size();
  std::vector<Match> out;
  for (std::size_t r : rotational_symmetries(m.form)) {
    Match s;
    s.form = m.form;
    s.cuts.resize(k);
    s.lengths.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t src = (j + r) % k;
      s.cuts[j] = m.cuts[src];
      s.lengths[j] = m.lengths[src];
      const Letter& l = m.form[j];
      if (s.assignment.contains(l.symbol)) continue;
      const Word spelled = m.image_of_letter(src);
      s.assignment.set(l.symbol, l.sign > 0 ? spelled : spelled.inverse());
    }
    s.rotation_offset = s.cuts[0];
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Match> dedupe_matches(const std::vector<Match>& matches) {
  std::vector<Match> reps;
  for (const auto& m : matches) {
    auto orbit = match_orbit(m);
    reps.push_back(*std::min_element(orbit.begin(), orbit.end(), match_less));
  }
  std::sort(reps.begin(), reps.end(), match_less);
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const Match& a, const Match& b) { return !match_less(a, b) && !match_less(b, a); }),
             reps.end());
  return reps;
}

Match preferred_alignment(const Match& m) {
  auto orbit = match_orbit(m);
  std::sort(orbit.begin(), orbit.end(), match_less);
  for (const auto& s : orbit) {
    if (s.rotation_offset == 0) return s;
  }
  for (const auto& s : orbit) {
    if (s.start_point().second == 0) return s;
  }
  return orbit.front();
}

}  // namespace wicks
