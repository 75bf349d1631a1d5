#include "wicks/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "wicks/error.hpp"

namespace wicks {

namespace {

struct RawEdge {
  std::size_t from;
  Symbol label;
  std::size_t to;
};

struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // Keep the smaller id as the root so the base vertex stays 0.
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::size_t FoldedGraph::follow(std::size_t start, const Word& w) const {
  std::size_t v = start;
  for (const auto& l : w) {
    auto it = adjacency_[v].find(l);
    if (it == adjacency_[v].end()) return npos;
    v = it->second;
  }
  return v;
}

std::string FoldedGraph::fingerprint() const {
  std::string out = std::to_string(vertex_count()) + ":";
  for (const auto& e : edges_) {
    out += std::to_string(e.from) + e.label.name() + std::to_string(e.to) + ";";
  }
  return out;
}

FoldedGraph folded_graph(const std::vector<Word>& generators, std::uint64_t fold_order_seed) {
  std::vector<RawEdge> edges;
  std::size_t vertices = 1;
  for (const auto& g : generators) {
    for (const auto& l : g) {
      if (!l.symbol.is_constant()) throw DomainError("subgroup generator with a variable: " + format_word(g));
    }
    if (g.empty()) continue;
    std::size_t at = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::size_t next = i + 1 == g.size() ? 0 : vertices++;
      if (g[i].sign > 0) {
        edges.push_back({at, g[i].symbol, next});
      } else {
        edges.push_back({next, g[i].symbol, at});
      }
      at = next;
    }
  }

  Components comp(vertices);
  std::mt19937_64 rng(fold_order_seed);
  for (bool changed = true; changed;) {
    changed = false;
    if (fold_order_seed != 0) std::shuffle(edges.begin(), edges.end(), rng);
    std::map<std::pair<std::size_t, Symbol>, std::size_t> out, in;
    for (const auto& e : edges) {
      const std::size_t f = comp.find(e.from);
      const std::size_t t = comp.find(e.to);
      auto [o, fresh_out] = out.emplace(std::make_pair(f, e.label), t);
      if (!fresh_out && comp.unite(o->second, t)) {
        changed = true;
        continue;
      }
      auto [i, fresh_in] = in.emplace(std::make_pair(t, e.label), f);
      if (!fresh_in && comp.unite(i->second, f)) changed = true;
    }
  }

  // Distinct folded edges between root vertices.
  std::set<std::tuple<std::size_t, Symbol, std::size_t>> folded;
  for (const auto& e : edges) folded.emplace(comp.find(e.from), e.label, comp.find(e.to));

  // Core: strip non-base vertices of degree one.
  std::map<std::size_t, int> degree;
  degree[0] = 0;
  for (const auto& [f, l, t] : folded) {
    ++degree[f];
    ++degree[t];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = folded.begin(); it != folded.end();) {
      const auto& [f, l, t] = *it;
      const bool hair = (f != 0 && degree[f] == 1) || (t != 0 && degree[t] == 1);
      if (hair) {
        --degree[f];
        --degree[t];
        it = folded.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  std::map<std::size_t, std::map<Letter, std::size_t>> adj;
  adj[0];
  for (const auto& [f, l, t] : folded) {
    adj[f][Letter{l, 1}] = t;
    adj[t][Letter{l, -1}] = f;
  }

  std::map<std::size_t, std::size_t> id;
  std::deque<std::size_t> queue{0};
  id[0] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [l, t] : adj[v]) {
      if (id.emplace(t, id.size()).second) queue.push_back(t);
    }
  }

  FoldedGraph g;
  g.adjacency_.resize(id.size());
  for (const auto& [v, nbrs] : adj) {
    for (const auto& [l, t] : nbrs) g.adjacency_[id[v]][l] = id[t];
  }
  for (const auto& [f, l, t] : folded) g.edges_.push_back({id[f], l, id[t]});
  std::sort(g.edges_.begin(), g.edges_.end(), [](const FoldedGraph::Edge& a, const FoldedGraph::Edge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  return g;
}

bool contains(const FoldedGraph& g, const Word& w) { return g.follow(FoldedGraph::base(), w) == FoldedGraph::base(); }

bool same_subgroup(const std::vector<Word>& a, const std::vector<Word>& b) { return folded_graph(a) == folded_graph(b); }

bool is_nielsen_reduced_pair(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw DomainError("Nielsen condition on a trivial element");
  // Y as formal symbols 0..3: u, u^-1, v, v^-1; i ^ 1 is the formal inverse.
  const std::vector<Word> y{u, u.inverse(), v, v.inverse()};
  auto len = [&](int i) { return static_cast<long>(y[i].size()); };
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if ((p ^ 1) == q) continue;
      if (static_cast<long>((y[p] * y[q]).size()) < std::max(len(p), len(q))) return false;
      for (int r = 0; r < 4; ++r) {
        if ((q ^ 1) == r) continue;
        if (static_cast<long>((y[p] * y[q] * y[r]).size()) <= len(p) - len(q) + len(r)) return false;
      }
    }
  }
  return true;
}

}  // namespace wicks
