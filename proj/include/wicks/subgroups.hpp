#pragma once

// Stallings core graphs of finitely generated subgroups of the constant free
// group, with membership and equality tests.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wicks/word.hpp"

namespace wicks {

class FoldedGraph {
 public:
  struct Edge {
    std::size_t from;
    Symbol label;
    std::size_t to;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  // Vertices are numbered 0..n-1 in breadth-first order from the base vertex
  // 0, following incident edges in letter order, so equal subgroups give
  // identical graphs.
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  static constexpr std::size_t base() noexcept { return 0; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Rank of the subgroup (E - V + 1).
  std::size_t rank() const noexcept { return edges_.size() + 1 - vertex_count(); }

  // Endpoint of the path from `start` labelled by `w`; npos if it leaves the graph.
  std::size_t follow(std::size_t start, const Word& w) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Compact text encoding, equal for equal subgroups.
  std::string fingerprint() const;

  friend bool operator==(const FoldedGraph& a, const FoldedGraph& b) { return a.edges_ == b.edges_; }

 private:
  friend FoldedGraph folded_graph(const std::vector<Word>&, std::uint64_t);
  std::vector<std::map<Letter, std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

// Wedge of loops on the generators, folded and cored. A nonzero
// `fold_order_seed` shuffles the order in which folds are performed; the
// result does not depend on it. Throws DomainError on variable symbols.
FoldedGraph folded_graph(const std::vector<Word>& generators, std::uint64_t fold_order_seed = 0);

bool contains(const FoldedGraph& g, const Word& w);
bool same_subgroup(const std::vector<Word>& a, const std::vector<Word>& b);

// Nielsen conditions on Y = {u, u^-1, v, v^-1}, with p, q, r ranging over Y
// and "pq != 1" meaning p, q are not formally inverse elements of Y:
//   N0  u, v nontrivial (required; DomainError otherwise);
//   N1  pq != 1  =>  |pq| >= max(|p|, |q|);
//   N2  pq != 1, qr != 1  =>  |pqr| > |p| - |q| + |r|.
bool is_nielsen_reduced_pair(const Word& u, const Word& v);

}  // namespace wicks
