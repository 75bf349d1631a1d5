#include "wicks/forms.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "wicks/error.hpp"
#include "wicks/surface.hpp"

namespace wicks {

namespace {

// Signed variable indices, +i for v_i and -i for v_i^-1.
using Code = std::vector<int>;

// Sort key: index, then + before -.
bool code_less(const Code& a, const Code& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int x, int y) {
    const int ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    if (ax != ay) return ax < ay;
    return x > y;
  });
}

// Least relabeling of the rotation starting at r: new variables get the next
// index with sign +1 at their first occurrence.
Code relabel_rotation(const Code& c, std::size_t r) {
  const std::size_t k = c.size();
  std::vector<int> map(k + 1, 0);  // old index -> signed new index
  Code out(k);
  int next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const int x = c[(r + i) % k];
    const int idx = x < 0 ? -x : x;
    if (map[idx] == 0) map[idx] = (x > 0 ? 1 : -1) * ++next;
    out[i] = x > 0 ? map[idx] : -map[idx];
  }
  return out;
}

Code canonical_code(const Code& c) {
  Code best = relabel_rotation(c, 0);
  for (std::size_t r = 1; r < c.size(); ++r) {
    Code cand = relabel_rotation(c, r);
    if (code_less(cand, best)) best = std::move(cand);
  }
  return best;
}

Code code_of(const Word& w) {
  std::map<Symbol, int> index;
  Code out;
  for (const auto& l : w) {
    auto [it, inserted] = index.emplace(l.symbol, static_cast<int>(index.size()) + 1);
    out.push_back(l.sign * it->second);
  }
  return out;
}

Word word_of(const Code& c) {
  std::vector<Letter> ls;
  for (int x : c) ls.push_back({form_variable(x < 0 ? -x : x), x < 0 ? -1 : 1});
  return Word(std::span<const Letter>(ls));
}

// Union-find over polygon corners with undo, for the incremental vertex count.
class UndoUnionFind {
 public:
  explicit UndoUnionFind(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }
  // Returns true on a merge. Every call pushes one history record.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return false;
    }
    if (size_[a] > size_[b]) std::swap(a, b);
    parent_[a] = b;
    size_[b] += size_[a];
    history_.push_back(a);
    return true;
  }
  void undo() {
    const int a = history_.back();
    history_.pop_back();
    if (a < 0) return;
    const int b = parent_[a];
    size_[b] -= size_[a];
    parent_[a] = a;
  }
  int size_of(int a) const { return size_[find(a)]; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class Enumerator {
 public:
  Enumerator(bool orientable, int length, int vertices, std::uint64_t budget)
      : orientable_(orientable),
        length_(length),
        edges_(length / 2),
        vertices_(vertices),
        max_class_(length > 2 ? length - 3 * (vertices - 1) : length),
        budget_(budget),
        seq_(length),
        first_pos_(edges_ + 1, -1),
        uf_(length) {}

  std::uint64_t nodes() const { return nodes_; }

  void run(std::set<Code, decltype(&code_less)>& out) {
    out_ = &out;
    extend(0);
  }

 private:
  int tail(int pos) const { return seq_[pos] > 0 ? pos : (pos + 1) % length_; }
  int head(int pos) const { return seq_[pos] > 0 ? (pos + 1) % length_ : pos; }

  void extend(int p) {
    if (++nodes_ > budget_) throw BudgetExceeded("Wicks form enumeration exceeded its node budget");
    if (p == length_) {
      leaf();
      return;
    }
    const int remaining = length_ - p;
    // Open a new variable.
    if (next_ < edges_ && open_count_ + 1 <= remaining - 1) {
      const int v = next_ + 1;
      if (p == 0 || seq_[p - 1] != -v) {
        seq_[p] = v;
        first_pos_[v] = p;
        ++next_;
        ++open_count_;
        extend(p + 1);
        --open_count_;
        --next_;
        first_pos_[v] = -1;
      }
    }
    if (p == 0) return;
    // Close an open variable.
    for (int v = 1; v <= next_; ++v) {
      if (first_pos_[v] < 0 || closed_[v]) continue;
      for (int sign : {-1, 1}) {
        if (orientable_ && sign > 0) continue;
        const int x = sign * v;
        if (seq_[p - 1] == -x) continue;
        if (p == length_ - 1 && seq_[0] == -x) continue;
        seq_[p] = x;
        closed_[v] = true;
        --open_count_;
        same_sign_ += (sign > 0);
        const int q = first_pos_[v];
        const bool m1 = uf_.unite(tail(q), tail(p));
        const bool m2 = uf_.unite(head(q), head(p));
        wasted_ += !m1 + !m2;
        const bool ok = wasted_ <= vertices_ && uf_.size_of(tail(p)) <= max_class_ &&
                        uf_.size_of(head(p)) <= max_class_;
        if (ok) extend(p + 1);
        wasted_ -= !m1 + !m2;
        uf_.undo();
        uf_.undo();
        same_sign_ -= (sign > 0);
        ++open_count_;
        closed_[v] = false;
      }
    }
  }

  void leaf() {
    if (wasted_ != vertices_) return;  // corners - merges == vertex count
    if (!orientable_ && same_sign_ == 0) return;
    // Canonical rotations only; other rotations reappear elsewhere in the search.
    Code c(seq_.begin(), seq_.end());
    Code canon = canonical_code(c);
    if (canon != c) return;
    const Word w = word_of(c);
    const auto report = classify_quadratic(w);
    if (!report.irredundant) return;
    out_->insert(std::move(canon));
  }

  bool orientable_;
  int length_;
  int edges_;
  int vertices_;
  int max_class_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> seq_;
  std::vector<int> first_pos_;
  std::vector<bool> closed_ = std::vector<bool>(64, false);
  int next_ = 0;
  int open_count_ = 0;
  int same_sign_ = 0;
  int wasted_ = 0;
  UndoUnionFind uf_;
  std::set<Code, decltype(&code_less)>* out_ = nullptr;
};

}  // namespace

Symbol form_variable(int index) { return Symbol::variable("v" + std::to_string(index)); }

Word canonical_word(const Word& cyclic) {
  const auto report = classify_quadratic(cyclic);
  if (!report.is_quadratic) throw DomainError("canonical_form of a non-quadratic word: " + format_word(cyclic));
  if (cyclic.empty()) return cyclic;
  return word_of(canonical_code(code_of(cyclic)));
}

CanonicalLabeling canonical_labeling(const Word& cyclic) {
  CanonicalLabeling out;
  out.word = canonical_word(cyclic);
  const Code c = code_of(cyclic);
  const Code best = code_of(out.word);
  while (out.rotation < c.size() && relabel_rotation(c, out.rotation) != best) ++out.rotation;
  int next = 0;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    const Letter& l = cyclic[(out.rotation + i) % cyclic.size()];
    if (!out.relabel.count(l.symbol)) out.relabel[l.symbol] = Letter{form_variable(++next), l.sign};
  }
  return out;
}

std::vector<std::size_t> rotational_symmetries(const Word& form) {
  const Code c = code_of(form);
  const Code base = relabel_rotation(c, 0);
  std::vector<std::size_t> out{0};
  for (std::size_t r = 1; r < c.size(); ++r) {
    if (relabel_rotation(c, r) == base) out.push_back(r);
  }
  return out;
}

CyclicWord canonical_form(const CyclicWord& w) { return CyclicWord(canonical_word(w.word())); }

std::pair<int, int> form_length_range(bool orientable, int genus) {
  const int chi = euler_characteristic(orientable, genus);
  const int min_edges = 2 - chi;       // one vertex
  const int max_edges = 3 * (1 - chi);  // trivalent
  return {2 * min_edges, 2 * std::max(min_edges, max_edges)};
}

std::vector<WicksForm> enumerate_wicks(bool orientable, int genus, bool maximal_only,
                                       const EnumerationOptions& opts) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  if (genus == 0) return {};
  const int chi = euler_characteristic(orientable, genus);
  auto [lo, hi] = form_length_range(orientable, genus);
  int top = hi;
  if (opts.max_length >= 0) top = std::min(top, opts.max_length);
  if (maximal_only) lo = hi;
  std::vector<WicksForm> out;
  std::uint64_t spent = 0;
  for (int length = lo; length <= top; length += 2) {
    const int vertices = chi - 1 + length / 2;
    if (vertices < 1) continue;
    std::set<Code, decltype(&code_less)> found(&code_less);
    Enumerator e(orientable, length, vertices, opts.node_budget - spent);
    e.run(found);
    spent += e.nodes();
    for (const auto& c : found) {
      WicksForm f;
      f.word = word_of(c);
      f.form = CyclicWord(f.word);
      f.orientable = orientable;
      f.genus = genus;
      f.length = length;
      f.maximal = length == hi;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::string table_file_name(bool orientable, int genus) {
  return std::string("wicks-") + (orientable ? "orientable" : "nonorientable") + "-g" + std::to_string(genus) +
         ".txt";
}

std::string format_table(bool orientable, int genus, const std::vector<WicksForm>& forms) {
  std::ostringstream os;
  os << "wicks " << (orientable ? "orientable" : "nonorientable") << " genus=" << genus
     << " count=" << forms.size() << "\n";
  for (const auto& f : forms) os << format_word(f.word) << "\n";
  return os.str();
}

std::vector<WicksForm> parse_table(const std::string& text, bool& orientable, int& genus) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw MalformedInput("empty form table");
  std::istringstream hs(header);
  std::string magic, kind, g, count;
  hs >> magic >> kind >> g >> count;
  if (magic != "wicks" || (kind != "orientable" && kind != "nonorientable") || g.rfind("genus=", 0) != 0 ||
      count.rfind("count=", 0) != 0) {
    throw MalformedInput("bad form table header: " + header);
  }
  orientable = kind == "orientable";
  genus = std::stoi(g.substr(6));
  const auto n = std::stoul(count.substr(6));
  const int hi = form_length_range(orientable, genus).second;
  std::vector<WicksForm> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    WicksForm f;
    f.word = parse_word(line, SymbolKind::variable);
    f.form = CyclicWord(f.word);
    f.orientable = orientable;
    f.genus = genus;
    f.length = static_cast<int>(f.word.size());
    f.maximal = f.length == hi;
    out.push_back(std::move(f));
  }
  if (out.size() != n) throw MalformedInput("form table count mismatch");
  return out;
}

std::uint64_t content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::optional<std::string> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

void write_table(const std::filesystem::path& dir, bool orientable, int genus,
                 const std::vector<WicksForm>& forms) {
  std::filesystem::create_directories(dir);
  const auto text = format_table(orientable, genus, forms);
  const auto path = dir / table_file_name(orientable, genus);
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
  }
  std::ofstream hash(path.string() + ".hash", std::ios::trunc);
  hash << hex(content_hash(text)) << "\n";
}

std::optional<std::vector<WicksForm>> read_table(const std::filesystem::path& dir, bool orientable,
                                                 int genus) {
  const auto path = dir / table_file_name(orientable, genus);
  auto text = slurp(path);
  auto hash = slurp(path.string() + ".hash");
  if (!text || !hash) return std::nullopt;
  std::string stored = *hash;
  while (!stored.empty() && std::isspace(static_cast<unsigned char>(stored.back()))) stored.pop_back();
  if (stored != hex(content_hash(*text))) return std::nullopt;
  try {
    bool o = false;
    int g = 0;
    auto forms = parse_table(*text, o, g);
    if (o != orientable || g != genus) return std::nullopt;
    return forms;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

FormLibrary::FormLibrary(std::optional<std::filesystem::path> table_dir, std::uint64_t node_budget)
    : dir_(std::move(table_dir)), budget_(node_budget) {}

FormLibrary& FormLibrary::shared() {
  static FormLibrary lib;
  return lib;
}

FormLibrary::Entry& FormLibrary::extend(bool orientable, int genus, int length) {
  const auto key = std::make_pair(orientable, genus);
  auto [it, inserted] = cache_.try_emplace(key);
  Entry& e = it->second;
  const int hi = form_length_range(orientable, genus).second;
  if (inserted && dir_) {
    if (auto stored = read_table(*dir_, orientable, genus)) {
      e.forms = std::move(*stored);
      e.done_length = hi;
    } else if (std::filesystem::exists(*dir_ / table_file_name(orientable, genus))) {
      ++regenerations_;
    }
  }
  const int want = std::min(length, hi);
  if (want <= e.done_length) return e;
  EnumerationOptions opts;
  opts.max_length = want;
  opts.node_budget = budget_;
  std::vector<WicksForm> fresh;
  try {
    fresh = enumerate_wicks(orientable, genus, false, opts);
  } catch (const BudgetExceeded&) {
    throw TableUnavailable("Wicks forms for " + std::string(orientable ? "orientable" : "nonorientable") +
                           " genus " + std::to_string(genus) + " up to length " + std::to_string(want) +
                           " exceed the enumeration budget");
  }
  e.forms = std::move(fresh);
  e.done_length = want;
  if (want == hi && dir_) write_table(*dir_, orientable, genus, e.forms);
  return e;
}

std::vector<WicksForm> FormLibrary::forms(bool orientable, int genus, std::size_t max_length) {
  if (genus <= 0) return {};
  std::lock_guard lock(mutex_);
  const int len = static_cast<int>(std::min<std::size_t>(max_length, 1u << 20));
  const Entry& e = extend(orientable, genus, len);
  std::vector<WicksForm> out;
  for (const auto& f : e.forms) {
    if (f.length <= len) out.push_back(f);
  }
  return out;
}

std::vector<WicksForm> FormLibrary::complete(bool orientable, int genus) {
  if (genus <= 0) return {};
  std::lock_guard lock(mutex_);
  return extend(orientable, genus, form_length_range(orientable, genus).second).forms;
}

int FormLibrary::regenerations() const {
  std::lock_guard lock(mutex_);
  return regenerations_;
}

}  // namespace wicks
