#include "gpv/srg.hpp"

#include "gpv/errors.hpp"

#include <string>

namespace gpv {

bool is_maximally_distant(const graph &g, const dist_matrix &d, vertex u, vertex v) {
  const int duv = d(u, v);
  for (vertex w : g.neighbors(u))
    if (d(v, w) > duv)
      return false;
  return true;
}

bool is_mmd(const graph &g, const dist_matrix &d, vertex u, vertex v) {
  if (u == v)
    throw degenerate_pair_error("mutual maximal distance needs distinct vertices, got " +
                                std::to_string(u) + " twice");
  return is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u);
}

graph strong_resolving_graph(const graph &g, const dist_matrix &d) {
  std::vector<edge> es;
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v)
      if (is_mmd(g, d, u, v))
        es.emplace_back(u, v);
  return graph::build(g.order(), es);
}

graph strong_resolving_graph(const graph &g) {
  if (!is_connected(g))
    throw disconnected_error("strong resolving graph needs a connected graph");
  return strong_resolving_graph(g, all_pairs_distances(g));
}

} // namespace gpv
