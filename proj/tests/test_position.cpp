#include "gpv/errors.hpp"
#include "gpv/generators.hpp"
#include "gpv/metric.hpp"
#include "gpv/position.hpp"
#include "gpv/srg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gpv;

namespace {

oracle::kind to_kind(variant v) {
  switch (v) {
  case variant::gp:
    return oracle::kind::gp;
  case variant::total:
    return oracle::kind::total;
  case variant::outer:
    return oracle::kind::outer;
  case variant::dual:
    return oracle::kind::dual;
  }
  return oracle::kind::gp;
}

std::vector<graph> random_corpus(int count, std::uint64_t seed) {
  std::vector<graph> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_connected(2 + i % 9, 0.2 + 0.1 * (i % 6), seed * 10000 + static_cast<std::uint64_t>(i)));
  return out;
}

std::vector<graph> named_corpus() {
  std::vector<graph> out;
  for (const char *s :
       {"path:1", "path:2", "path:9", "path:14", "cycle:3", "cycle:4", "cycle:5", "cycle:8", "cycle:13",
        "complete:6", "complete_bipartite:3,4", "complete_bipartite:2,6", "star:6", "theta:1,2,2",
        "theta:2,2,2", "theta:2,3,3", "theta:1,3,5", "theta:3,3,4", "theta:2,2,3,3", "gm_join:3",
        "gm_join:4", "gm_join:5", "gm_join:8", "chain_cycles:1,4", "chain_cycles:2,4",
        "chain_cycles:2,5", "chain_cycles:1,7", "chain_cycles:3,4"})
    out.push_back(generate(family_spec::parse(s)).g);
  out.push_back(petersen_graph());
  out.push_back(product(path_graph(3), cycle_graph(4), product_kind::cartesian));
  return out;
}

} // namespace

TEST_CASE("is_positionable examples") {
  auto d = all_pairs_distances(path_graph(5));
  vertex_set x(5, {2});
  CHECK_FALSE(is_positionable(d, x, 0, 4));
  CHECK(is_positionable(d, x, 0, 2));
  CHECK(is_positionable(d, vertex_set::full(5), 1, 2));
  CHECK_THROWS_AS(is_positionable(d, x, 3, 3), degenerate_pair_error);
}

TEST_CASE("is_variant_set examples") {
  graph c5 = cycle_graph(5);
  auto d = all_pairs_distances(c5);
  CHECK(is_variant_set(c5, d, vertex_set(5, {0, 1}), variant::dual));
  CHECK_FALSE(is_variant_set(c5, d, vertex_set(5, {0}), variant::dual));
  CHECK(is_variant_set(c5, d, vertex_set(5), variant::dual));
  graph k3 = complete_graph(3);
  CHECK(is_variant_set(k3, all_pairs_distances(k3), vertex_set::full(3), variant::total));
}

TEST_CASE("solve examples") {
  graph p7 = path_graph(7);
  for (variant v : all_variants)
    CHECK(solve(p7, v).value == 2);
  auto d = all_pairs_distances(p7);
  CHECK(enumerate_variant_sets(p7, d, variant::dual, 2) ==
        std::vector<vertex_set>{vertex_set(7, {0, 1}), vertex_set(7, {0, 6}), vertex_set(7, {5, 6})});
  CHECK(solve(p7, variant::dual).witness == vertex_set(7, {0, 1}));

  graph k3k4 = product(complete_graph(3), complete_graph(4), product_kind::cartesian);
  CHECK(solve(k3k4, variant::outer).value == 3);
  CHECK(solve(cycle_graph(4), variant::dual).value == 2);
  CHECK(solve(cycle_graph(5), variant::dual).value == 2);
  CHECK(solve(product(complete_graph(2), complete_graph(3), product_kind::cartesian), variant::gp).value == 3);

  CHECK(solve(p7, variant::total).how == method::closed_form);
  CHECK(solve(p7, variant::outer).how == method::clique);
  CHECK(solve(p7, variant::gp).how == method::branch_and_bound);
}

TEST_CASE("brute_force examples") {
  CHECK(brute_force(cycle_graph(6), variant::dual).value == 0);
  CHECK(brute_force(cycle_graph(6), variant::dual).witness.empty());
  CHECK(brute_force(complete_bipartite_graph(2, 3), variant::dual).value == 0);
  CHECK(brute_force(generate(family_spec::parse("gm_join:5")).g, variant::dual).value == 0);
  CHECK(brute_force(cycle_graph(5), variant::gp).how == method::exhaustive);
}

TEST_CASE("single vertex and errors") {
  graph k1 = path_graph(1);
  for (variant v : all_variants) {
    CHECK(solve(k1, v).value == 1);
    CHECK(solve(k1, v).witness == vertex_set(1, {0}));
    CHECK(brute_force(k1, v).value == 1);
  }
  CHECK_THROWS_AS(solve(edgeless_graph(3), variant::gp), disconnected_error);
  CHECK_THROWS_AS(solve(graph::build(0, {}), variant::gp), disconnected_error);
  CHECK_THROWS_AS(brute_force(edgeless_graph(2), variant::dual), disconnected_error);
  CHECK_THROWS_AS(brute_force(cycle_graph(19), variant::gp), size_error);
  CHECK_THROWS_AS(brute_force(cycle_graph(9), variant::gp, 8), size_error);
  CHECK(parse_variant("outer") == variant::outer);
  CHECK_THROWS_AS(parse_variant("inner"), spec_error);
}

TEST_CASE("is_variant_set agrees with explicit shortest paths") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    graph g = random_connected(2 + i % 7, 0.4, 500 + static_cast<std::uint64_t>(i));
    auto d = all_pairs_distances(g);
    oracle::shortest_paths sp(g);
    const int n = g.order();
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      auto x = oracle::from_mask(n, m);
      for (variant v : all_variants)
        CHECK(is_variant_set(g, d, x, v) == oracle::variant_set(g, sp, x, to_kind(v)));
    }
  }
}

TEST_CASE("solve agrees with brute force on 300 random graphs") {
  for (const graph &g : random_corpus(300, 1)) {
    auto d = all_pairs_distances(g);
    for (variant v : all_variants) {
      certificate s = solve(g, d, v);
      certificate b = brute_force(g, v);
      CHECK(s.value == b.value);
      CHECK(s.witness == b.witness);
      CHECK(verify(g, d, s));
      CHECK(is_variant_set(g, d, s.witness, v));
    }
  }
}

TEST_CASE("solve agrees with brute force on named graphs") {
  for (const graph &g : named_corpus()) {
    auto d = all_pairs_distances(g);
    for (variant v : all_variants) {
      certificate s = solve(g, d, v);
      CHECK(verify(g, d, s));
      if (g.order() <= 14) {
        certificate b = brute_force(g, v);
        CHECK(s.value == b.value);
        CHECK(s.witness == b.witness);
        if (s.value < g.order())
          CHECK(enumerate_variant_sets(g, d, v, s.value + 1).empty());
      }
    }
  }
}

TEST_CASE("oracle agreement on small graphs via explicit paths") {
  for (const graph &g : random_corpus(40, 2))
    if (g.order() <= 8)
      for (variant v : all_variants)
        CHECK(solve(g, v).value == oracle::variant_number(g, to_kind(v)));
}

TEST_CASE("chain inequalities, outer bounds, simplicial subsets") {
  auto corpus = random_corpus(150, 3);
  for (const graph &g : named_corpus())
    corpus.push_back(g);
  for (const graph &g : corpus) {
    auto d = all_pairs_distances(g);
    const int gp = solve(g, d, variant::gp).value;
    const int total = solve(g, d, variant::total).value;
    const int outer = solve(g, d, variant::outer).value;
    const int dual = solve(g, d, variant::dual).value;
    CHECK(gp >= outer);
    CHECK(outer >= total);
    CHECK(gp >= dual);
    CHECK(dual >= total);
    if (g.order() >= 2)
      CHECK(outer >= 2);
    CHECK(gp >= clique_number(strong_resolving_graph(g, d)));
    CHECK(total == simplicial_set(g).size());

    vertex_set s = simplicial_set(g);
    auto members = s.members();
    if (members.size() <= 12)
      for (std::uint64_t m = 0; m < (1ull << members.size()); ++m) {
        vertex_set x(g.order());
        for (std::size_t i = 0; i < members.size(); ++i)
          if (m >> i & 1)
            x.insert(members[i]);
        CHECK(is_variant_set(g, d, x, variant::dual));
      }
  }
}

TEST_CASE("dual sets are the gp sets with convex complement") {
  for (const graph &g : random_corpus(120, 4)) {
    auto d = all_pairs_distances(g);
    const int n = g.order();
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
      auto x = oracle::from_mask(n, m);
      CHECK(is_variant_set(g, d, x, variant::dual) ==
            (is_variant_set(g, d, x, variant::gp) && is_convex(g, d, x.complement())));
    }
  }
}

TEST_CASE("heredity of gp, total, outer witnesses") {
  for (const graph &g : random_corpus(100, 5)) {
    auto d = all_pairs_distances(g);
    for (variant v : {variant::gp, variant::total, variant::outer}) {
      auto members = solve(g, d, v).witness.members();
      for (std::uint64_t m = 0; m < (1ull << members.size()); ++m) {
        vertex_set x(g.order());
        for (std::size_t i = 0; i < members.size(); ++i)
          if (m >> i & 1)
            x.insert(members[i]);
        CHECK(is_variant_set(g, d, x, v));
      }
    }
  }
}

TEST_CASE("dual is not hereditary on C5") {
  graph c5 = cycle_graph(5);
  auto d = all_pairs_distances(c5);
  certificate c = solve(c5, d, variant::dual);
  REQUIRE(c.value == 2);
  REQUIRE(c.witness.size() == 2);
  for (vertex v : c.witness.members())
    CHECK_FALSE(is_variant_set(c5, d, vertex_set(5, {v}), variant::dual));
}

TEST_CASE("verify rejects bad certificates") {
  graph c5 = cycle_graph(5);
  auto d = all_pairs_distances(c5);
  certificate c = solve(c5, d, variant::dual);
  CHECK(verify(c5, d, c));
  certificate wrong = c;
  wrong.value = 3;
  CHECK_FALSE(verify(c5, d, wrong));
  certificate bad{variant::dual, 1, vertex_set(5, {0}), method::exhaustive};
  CHECK_FALSE(verify(c5, d, bad));
}

TEST_CASE("larger instances stay exact") {
  graph g = product(cycle_graph(5), path_graph(8), product_kind::cartesian);
  auto d = all_pairs_distances(g);
  for (variant v : all_variants)
    CHECK(verify(g, d, solve(g, d, v)));
  graph r = random_connected(40, 0.1, 77);
  auto dr = all_pairs_distances(r);
  for (variant v : all_variants)
    CHECK(verify(r, dr, solve(r, dr, v)));
}
