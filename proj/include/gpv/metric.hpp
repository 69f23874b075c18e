#pragma once

#include "gpv/graph.hpp"

#include <optional>
#include <vector>

namespace gpv {

/// All-pairs hop distances of a connected graph.
class dist_matrix {
public:
  dist_matrix() = default;

  int order() const { return n_; }
  int operator()(vertex u, vertex v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  int diameter() const { return diameter_; }
  int eccentricity(vertex v) const;

private:
  friend dist_matrix all_pairs_distances(const graph &g);

  int n_ = 0;
  int diameter_ = 0;
  std::vector<int> d_;
};

/// BFS from every vertex. Throws disconnected_error unless g is connected with n >= 1.
dist_matrix all_pairs_distances(const graph &g);

/// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const graph &g);

/// Whether w lies on some shortest u,v-path, i.e. d(u,w) + d(w,v) = d(u,v).
/// Throws degenerate_pair_error for u == v.
bool lies_between(const dist_matrix &d, vertex u, vertex w, vertex v);

/// Geodesic interval I(u,v): every vertex on a shortest u,v-path, endpoints included.
vertex_set interval(const dist_matrix &d, vertex u, vertex v);

/// Interior of the interval: I(u,v) without u and v.
vertex_set interval_interior(const dist_matrix &d, vertex u, vertex v);

/// No shortest path between two members of w leaves w. Empty sets and singletons are convex.
bool is_convex(const graph &g, const dist_matrix &d, const vertex_set &w);

/// Smallest convex superset of w.
vertex_set convex_hull(const dist_matrix &d, const vertex_set &w);

/// S(G): vertices whose neighborhood is a clique.
vertex_set simplicial_set(const graph &g);

/// S(G) computed metrically: no two neighbors at distance 2.
vertex_set simplicial_set(const graph &g, const dist_matrix &d);

/// Whether the edge xy is the middle edge of an isometric P4.
/// Throws not_an_edge_error if x and y are not adjacent.
bool is_p4_inner_isometric(const graph &g, const dist_matrix &d, vertex x, vertex y);

/// Every edge of g is P4-inner isometric (false for edgeless graphs).
bool all_edges_p4_inner_isometric(const graph &g, const dist_matrix &d);

} // namespace gpv
