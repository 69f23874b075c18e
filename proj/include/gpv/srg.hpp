#pragma once

#include "gpv/graph.hpp"
#include "gpv/metric.hpp"

namespace gpv {

/// u is maximally distant from v: no neighbor of u is farther from v than u is.
bool is_maximally_distant(const graph &g, const dist_matrix &d, vertex u, vertex v);

/// u and v are each maximally distant from the other. Throws degenerate_pair_error for u == v.
bool is_mmd(const graph &g, const dist_matrix &d, vertex u, vertex v);

/// Strong resolving graph: same vertices, edges are the mutually maximally distant pairs.
graph strong_resolving_graph(const graph &g, const dist_matrix &d);

/// Computes distances first; throws disconnected_error on disconnected input.
graph strong_resolving_graph(const graph &g);

} // namespace gpv
