#pragma once

#include "gpv/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace gpv {

using edge = std::pair<vertex, vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
class graph {
public:
  graph() = default;

  /// Rejects loops, duplicate edges (in either orientation) and out-of-range endpoints.
  static graph build(int n, std::span<const edge> edges);
  static graph build(int n, std::initializer_list<edge> edges) {
    return build(n, std::span<const edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  const std::vector<vertex> &neighbors(vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  const vertex_set &neighborhood(vertex v) const { return nbr_[static_cast<std::size_t>(v)]; }
  int degree(vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  bool adjacent(vertex u, vertex v) const { return nbr_[static_cast<std::size_t>(u)].contains(v); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<edge> edges() const;

  bool is_complete() const { return 2 * static_cast<long>(m_) == static_cast<long>(n_) * (n_ - 1); }

  friend bool operator==(const graph &a, const graph &b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<vertex>> adj_;
  std::vector<vertex_set> nbr_;
};

struct induced_result {
  graph subgraph;
  /// old_to_new[v] is the new index of v, or -1 if v was dropped.
  std::vector<vertex> old_to_new;
  /// new_to_old[i] is the original vertex behind new index i.
  std::vector<vertex> new_to_old;
};

induced_result induced_subgraph(const graph &g, const vertex_set &keep);

bool is_connected(const graph &g);

/// Size of a largest clique (0 for the empty graph).
int clique_number(const graph &g);

/// A largest clique; the lexicographically least one when several exist.
vertex_set maximum_clique(const graph &g);

} // namespace gpv
