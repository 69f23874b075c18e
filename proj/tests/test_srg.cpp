#include "gpv/errors.hpp"
#include "gpv/generators.hpp"
#include "gpv/metric.hpp"
#include "gpv/srg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gpv;

namespace {

// MMD straight from the definition, on Floyd-Warshall distances.
graph srg_oracle(const graph &g) {
  auto d = oracle::floyd_warshall(g);
  auto maxdist = [&](vertex u, vertex v) {
    for (vertex w : g.neighbors(u))
      if (d[w][v] > d[u][v])
        return false;
    return true;
  };
  std::vector<edge> es;
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v)
      if (maxdist(u, v) && maxdist(v, u))
        es.emplace_back(u, v);
  return graph::build(g.order(), es);
}

} // namespace

TEST_CASE("strong resolving graph: examples") {
  CHECK(strong_resolving_graph(path_graph(4)) == graph::build(4, {{0, 3}}));
  CHECK(strong_resolving_graph(complete_graph(4)) == complete_graph(4));
  CHECK(strong_resolving_graph(cycle_graph(4)) == graph::build(4, {{0, 2}, {1, 3}}));
  // Odd cycles: each vertex is MMD with its two antipodal vertices.
  CHECK(strong_resolving_graph(cycle_graph(5)).size() == 5);
  CHECK(strong_resolving_graph(star_graph(3)) == graph::build(4, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("strong resolving graph: errors and trivial inputs") {
  CHECK_THROWS_AS(strong_resolving_graph(edgeless_graph(2)), disconnected_error);
  CHECK(strong_resolving_graph(path_graph(1)).size() == 0);
  auto d = all_pairs_distances(path_graph(3));
  CHECK_THROWS_AS(is_mmd(path_graph(3), d, 1, 1), degenerate_pair_error);
  CHECK(is_maximally_distant(path_graph(3), d, 0, 1));
  CHECK_FALSE(is_maximally_distant(path_graph(3), d, 1, 0));
}

TEST_CASE("strong resolving graph matches the definition; nontrivial graphs have an edge") {
  std::mt19937_64 rng(11);
  int tried = 0;
  for (int i = 0; i < 300; ++i) {
    graph g = oracle::random_graph(2 + i % 10, 0.25 + 0.05 * (i % 8), rng);
    if (!is_connected(g))
      continue;
    ++tried;
    graph s = strong_resolving_graph(g);
    CHECK(s == srg_oracle(g));
    CHECK(s.size() >= 1);
  }
  CHECK(tried > 100);
}

TEST_CASE("srg of a direct product of factor SRGs equals srg of the cartesian product") {
  const std::vector<graph> fs{path_graph(2), path_graph(3), path_graph(4), cycle_graph(4),
                              cycle_graph(5), complete_graph(3), star_graph(3),
                              generate(family_spec::parse("theta:1,2,2")).g};
  for (const graph &g : fs)
    for (const graph &h : fs) {
      graph lhs = strong_resolving_graph(product(g, h, product_kind::cartesian));
      graph rhs = product(strong_resolving_graph(g), strong_resolving_graph(h), product_kind::direct);
      CHECK(lhs == rhs);
      CHECK(clique_number(rhs) ==
            std::min(clique_number(strong_resolving_graph(g)), clique_number(strong_resolving_graph(h))));
    }
}
