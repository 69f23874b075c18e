#include "gpv/errors.hpp"
#include "gpv/generators.hpp"
#include "gpv/metric.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace gpv;

namespace {

graph gen(const char *text) { return generate(family_spec::parse(text)).g; }

void check_simple(const graph &g) {
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v : g.neighbors(u)) {
      CHECK(u != v);
      CHECK(g.adjacent(v, u));
    }
}

} // namespace

TEST_CASE("family spec text form") {
  auto s = family_spec::parse("theta:2,3,3");
  CHECK(s.kind == family::theta);
  CHECK(s.params == std::vector<int>{2, 3, 3});
  CHECK(s.to_string() == "theta:2,3,3");
  CHECK_THROWS_AS(family_spec::parse("theta"), spec_error);
  CHECK_THROWS_AS(family_spec::parse("wheel:5"), spec_error);
  CHECK_THROWS_AS(family_spec::parse("cycle:5,"), spec_error);
  CHECK_THROWS_AS(family_spec::parse("cycle:x"), spec_error);
  CHECK_THROWS_AS(family_spec::parse("cycle:5x"), spec_error);
}

TEST_CASE("generate: examples") {
  graph c5 = gen("cycle:5");
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);

  graph k23 = gen("theta:2,2,2");
  CHECK(k23.order() == 5);
  CHECK(k23.size() == 6);
  CHECK(k23 == graph::build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));

  // P_5 joined with 2K_1: (m - 1) path edges plus 2m join edges.
  auto g5 = generate(family_spec::parse("gm_join:5"));
  CHECK(g5.g.order() == 7);
  CHECK(g5.g.size() == 4 + 2 * 5);
  CHECK(g5.labels.at("x") == 5);
  CHECK(g5.labels.at("x'") == 6);
  CHECK(g5.labels.at("p_1") == 0);
  CHECK(g5.labels.at("p_m") == 4);
  CHECK_FALSE(g5.g.adjacent(5, 6));

  // Two C_4 sharing a vertex: 2 * 3 + 1 cycle vertices, plus the pendant.
  auto g24 = generate(family_spec::parse("chain_cycles:2,4"));
  CHECK(g24.g.order() == 8);
  CHECK(g24.g.size() == 9);
  CHECK(g24.g.degree(g24.labels.at("u")) == 1);
  CHECK(g24.g.adjacent(g24.labels.at("u"), g24.labels.at("v")));
}

TEST_CASE("generate: parameter errors") {
  CHECK_THROWS_AS(gen("theta:1,1,2"), spec_error);
  CHECK_THROWS_AS(gen("theta:3,2"), spec_error);
  CHECK_THROWS_AS(gen("theta:4"), spec_error);
  CHECK_THROWS_AS(gen("theta:0,2"), spec_error);
  CHECK_THROWS_AS(gen("cycle:2"), spec_error);
  CHECK_THROWS_AS(gen("path:0"), spec_error);
  CHECK_THROWS_AS(gen("path:3,4"), spec_error);
  CHECK_THROWS_AS(gen("chain_cycles:0,4"), spec_error);
  CHECK_THROWS_AS(gen("chain_cycles:2,3"), spec_error);
  CHECK_THROWS_AS(gen("complete_bipartite:2"), spec_error);
}

TEST_CASE("theta graphs: order, size, hubs") {
  // All length vectors with at most 6 paths of length <= 5.
  std::vector<std::vector<int>> vecs;
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> l(static_cast<std::size_t>(k), 1);
    while (true) {
      if (std::is_sorted(l.begin(), l.end()) && l[1] >= 2)
        vecs.push_back(l);
      std::size_t i = 0;
      while (i < l.size() && l[i] == 5)
        l[i++] = 1;
      if (i == l.size())
        break;
      ++l[i];
    }
  }
  REQUIRE(vecs.size() > 50);
  for (const auto &l : vecs) {
    auto t = generate({family::theta, l});
    int interior = 0, total = 0;
    for (int x : l) {
      interior += x - 1;
      total += x;
    }
    CHECK(t.g.order() == 2 + interior);
    CHECK(t.g.size() == total);
    CHECK(is_connected(t.g));
    CHECK(t.g.degree(t.labels.at("a")) == static_cast<int>(l.size()));
    CHECK(t.g.degree(t.labels.at("b")) == static_cast<int>(l.size()));
    check_simple(t.g);
  }
}

TEST_CASE("chain of cycles degrees") {
  for (int k = 1; k <= 5; ++k)
    for (int l = 4; l <= 8; ++l) {
      auto c = generate({family::chain_cycles, {k, l}});
      const graph &g = c.g;
      REQUIRE(g.order() == k * (l - 1) + 2);
      CHECK(g.size() == k * l + 1);
      CHECK(is_connected(g));
      const vertex u = c.labels.at("u"), v = c.labels.at("v");
      int deg4 = 0, deg3 = 0, deg2 = 0, deg1 = 0;
      for (vertex x = 0; x < g.order(); ++x) {
        switch (g.degree(x)) {
        case 1:
          ++deg1;
          CHECK(x == u);
          break;
        case 2:
          ++deg2;
          break;
        case 3:
          ++deg3;
          CHECK(x == v);
          break;
        case 4:
          ++deg4;
          break;
        default:
          FAIL("unexpected degree");
        }
      }
      CHECK(deg1 == 1);
      CHECK(deg3 == 1);
      CHECK(deg4 == k - 1);
      CHECK(deg2 == g.order() - 2 - (k - 1));
      CHECK(girth(g) == l);
    }
}

TEST_CASE("chain of cycles: consecutive shared vertices are floor(l/2) apart; pendant sits at the exit") {
  for (int l = 4; l <= 8; ++l) {
    auto c = generate({family::chain_cycles, {3, l}});
    auto d = oracle::floyd_warshall(c.g);
    std::vector<vertex> shared;
    for (vertex x = 0; x < c.g.order(); ++x)
      if (c.g.degree(x) == 4)
        shared.push_back(x);
    REQUIRE(shared.size() == 2);
    CHECK(d[shared[0]][shared[1]] == l / 2);
    CHECK(d[shared[1]][c.labels.at("v")] == l / 2);
  }
}

TEST_CASE("products: examples") {
  graph k2 = complete_graph(2);
  CHECK(product(k2, k2, product_kind::cartesian) == graph::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  graph direct = product(k2, k2, product_kind::direct);
  CHECK(direct == graph::build(4, {{0, 3}, {1, 2}}));
  CHECK_FALSE(is_connected(direct));
  CHECK(product(k2, k2, product_kind::strong) == complete_graph(4));
  CHECK(parse_product_kind("strong") == product_kind::strong);
  CHECK_THROWS_AS(parse_product_kind("lexicographic"), spec_error);
}

TEST_CASE("products: edge rules and counts") {
  const std::vector<graph> fs{path_graph(2), path_graph(3), cycle_graph(4), cycle_graph(5),
                              complete_graph(3), star_graph(3), gen("theta:1,2,3")};
  for (const graph &g : fs)
    for (const graph &h : fs) {
      const int ng = g.order(), nh = h.order();
      graph cart = product(g, h, product_kind::cartesian);
      graph dir = product(g, h, product_kind::direct);
      graph strong = product(g, h, product_kind::strong);
      CHECK(cart.order() == ng * nh);
      CHECK(cart.size() == ng * h.size() + nh * g.size());
      CHECK(dir.size() == 2 * g.size() * h.size());
      CHECK(strong.size() == cart.size() + dir.size());
      CHECK(is_connected(cart));
      CHECK(is_connected(strong));
      for (vertex a = 0; a < ng; ++a)
        for (vertex b = 0; b < nh; ++b)
          for (vertex c = 0; c < ng; ++c)
            for (vertex e = 0; e < nh; ++e) {
              const vertex p = a * nh + b, q = c * nh + e;
              if (p == q)
                continue;
              const bool cart_edge = (g.adjacent(a, c) && b == e) || (a == c && h.adjacent(b, e));
              const bool dir_edge = g.adjacent(a, c) && h.adjacent(b, e);
              CHECK(cart.adjacent(p, q) == cart_edge);
              CHECK(dir.adjacent(p, q) == dir_edge);
              CHECK(strong.adjacent(p, q) == (cart_edge || dir_edge));
            }
    }
}

TEST_CASE("join") {
  graph k1 = complete_graph(1);
  CHECK(join(k1, k1) == complete_graph(2));
  CHECK(join(path_graph(5), edgeless_graph(2)) == gen("gm_join:5"));
  graph wheel = join(cycle_graph(4), k1);
  CHECK(wheel.size() == 8);
  CHECK(wheel.degree(4) == 4);
  for (const graph &g : {path_graph(3), cycle_graph(5), complete_graph(4)})
    for (const graph &h : {edgeless_graph(2), star_graph(2)}) {
      graph j = join(g, h);
      CHECK(j.size() == g.size() + h.size() + g.order() * h.order());
    }
}

TEST_CASE("random_connected") {
  CHECK(random_connected(1, 0.5, 99) == graph::build(1, {}));
  CHECK(random_connected(5, 1.0, 3) == complete_graph(5));
  CHECK(random_connected(8, 0.4, 7) == random_connected(8, 0.4, 7));
  CHECK_FALSE(random_connected(8, 0.4, 7) == random_connected(8, 0.4, 8));
  for (std::uint64_t s = 0; s < 40; ++s)
    CHECK(is_connected(random_connected(10, 0.3, s)));
  CHECK_THROWS_AS(random_connected(30, 0.01, 1, 20), generation_error);
  CHECK_THROWS_AS(random_connected(5, 0.0, 1), spec_error);
  CHECK_THROWS_AS(random_connected(5, 1.5, 1), spec_error);
}

TEST_CASE("random_tree") {
  for (int n = 1; n <= 14; ++n)
    for (std::uint64_t s = 0; s < 5; ++s) {
      graph t = random_tree(n, s);
      CHECK(t.order() == n);
      CHECK(t.size() == n - 1);
      CHECK(is_connected(t));
    }
  CHECK(random_tree(9, 4) == random_tree(9, 4));
}

TEST_CASE("named graphs") {
  CHECK(petersen_graph().size() == 15);
  for (vertex v = 0; v < 10; ++v)
    CHECK(petersen_graph().degree(v) == 3);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
  CHECK(edgeless_graph(3).size() == 0);
}
