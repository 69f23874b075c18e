#include "gpv/laws.hpp"

#include "gpv/errors.hpp"
#include "gpv/generators.hpp"
#include "gpv/metric.hpp"
#include "gpv/position.hpp"
#include "gpv/srg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

namespace gpv {

namespace {

constexpr std::string_view holds = "holds";

law_report make_report(std::string law, std::string_view instance, std::string expected,
                       std::string actual) {
  law_report r;
  r.law = std::move(law);
  r.instance = std::string(instance);
  r.passed = expected == actual;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  return r;
}

// Report for a universally quantified statement: passes unless a violation
// was found, in which case the violation is attached.
law_report quantified(std::string law, std::string_view instance, const graph &g,
                      std::optional<std::string> violation,
                      std::vector<std::pair<std::string, vertex_set>> sets = {}) {
  law_report r = make_report(std::move(law), instance, std::string(holds),
                             violation ? "fails: " + *violation : std::string(holds));
  if (!r.passed)
    r.counterexample = law_payload{g, std::move(sets)};
  return r;
}

law_report value_report(std::string law, std::string_view instance, const graph &g, int expected,
                        const certificate &c) {
  law_report r = make_report(std::move(law), instance, std::to_string(expected),
                             std::to_string(c.value));
  if (!r.passed)
    r.counterexample = law_payload{g, {{"witness", c.witness}}};
  return r;
}

vertex_set from_mask(int n, std::uint32_t mask) {
  vertex_set s(n);
  for (vertex v = 0; v < n; ++v)
    if (mask >> v & 1u)
      s.insert(v);
  return s;
}

bool pairwise_mmd(const graph &g, const dist_matrix &d, const vertex_set &x) {
  auto m = x.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!is_mmd(g, d, m[i], m[j]))
        return false;
  return true;
}

bool induces_clique(const graph &g, const vertex_set &x) {
  auto m = x.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j]))
        return false;
  return true;
}

std::string tuple_string(std::initializer_list<int> values) {
  std::string s = "(";
  bool first = true;
  for (int v : values) {
    if (!first)
      s += ", ";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

void append(std::vector<law_report> &out, std::vector<law_report> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

void require_connected(const graph &g, std::string_view what) {
  if (g.order() == 0 || !is_connected(g))
    throw disconnected_error(std::string(what) + " must be connected and nonempty");
}

} // namespace

std::vector<law_report> check_structural(const graph &g, std::string_view instance) {
  const int n = g.order();
  if (n > structural_max_n)
    throw size_error("structural laws enumerate all subsets and accept at most " +
                     std::to_string(structural_max_n) + " vertices, got " + std::to_string(n));
  require_connected(g, "structural law instance");
  const dist_matrix d = all_pairs_distances(g);
  const vertex_set simplicial = simplicial_set(g);
  const graph srg = strong_resolving_graph(g, d);
  std::vector<law_report> out;

  // Subset sweeps.
  std::optional<std::string> total_bad, outer_bad, dual_bad, simp_bad;
  vertex_set total_x(n), outer_x(n), dual_x(n), simp_x(n);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    vertex_set x = from_mask(n, mask);
    const bool is_total = is_variant_set(g, d, x, variant::total);
    const bool is_outer = is_variant_set(g, d, x, variant::outer);
    const bool is_gp = is_variant_set(g, d, x, variant::gp);
    const bool is_dual = is_variant_set(g, d, x, variant::dual);
    const bool in_s = x.is_subset_of(simplicial);
    if (!total_bad && is_total != in_s) {
      total_bad = "X = " + x.to_string() + (is_total ? " is total but not inside S(G)"
                                                     : " lies in S(G) but is not total");
      total_x = x;
    }
    if (!outer_bad && x.size() >= 2 && is_outer != pairwise_mmd(g, d, x)) {
      outer_bad = "X = " + x.to_string() + (is_outer ? " is outer but not pairwise MMD"
                                                     : " is pairwise MMD but not outer");
      outer_x = x;
    }
    const bool complement_convex = is_convex(g, d, x.complement());
    if (!dual_bad && is_dual != (is_gp && complement_convex)) {
      dual_bad = "X = " + x.to_string() + ": dual=" + (is_dual ? "yes" : "no") +
                 ", gp=" + (is_gp ? "yes" : "no") +
                 ", convex complement=" + (complement_convex ? "yes" : "no");
      dual_x = x;
    }
    if (!simp_bad && in_s && !is_dual) {
      simp_bad = "X = " + x.to_string() + " lies in S(G) but is not dual";
      simp_x = x;
    }
  }
  out.push_back(quantified("total.characterization", instance, g, total_bad,
                           {{"X", total_x}, {"S(G)", simplicial}}));
  out.push_back(quantified("outer.characterization", instance, g, outer_bad, {{"X", outer_x}}));
  out.push_back(quantified("dual.characterization", instance, g, dual_bad, {{"X", dual_x}}));
  out.push_back(quantified("dual.simplicial_subsets", instance, g, simp_bad, {{"X", simp_x}}));

  // Adjacent pairs: (i) dual, (ii) G - {x,y} convex, (iii) local distance condition.
  std::optional<std::string> adj_bad, nonadj_bad;
  vertex_set adj_x(n), nonadj_x(n);
  for (vertex x = 0; x < n; ++x)
    for (vertex y = x + 1; y < n; ++y) {
      vertex_set pair(n, {x, y});
      const bool dual = is_variant_set(g, d, pair, variant::dual);
      if (g.adjacent(x, y)) {
        const bool convex = is_convex(g, d, pair.complement());
        vertex_set around = g.neighborhood(x) | g.neighborhood(y);
        bool close = true;
        auto m = around.members();
        for (std::size_t i = 0; close && i < m.size(); ++i)
          for (std::size_t j = i + 1; j < m.size(); ++j)
            if (d(m[i], m[j]) > 2) {
              close = false;
              break;
            }
        vertex_set nx = g.neighborhood(x), ny = g.neighborhood(y);
        nx.erase(y);
        ny.erase(x);
        const bool local = close && induces_clique(g, nx) && induces_clique(g, ny);
        if (!adj_bad && !(dual == convex && convex == local)) {
          adj_bad = "edge " + pair.to_string() + ": (i)=" + std::to_string(dual) +
                    " (ii)=" + std::to_string(convex) + " (iii)=" + std::to_string(local);
          adj_x = pair;
        }
      } else {
        const bool both_simplicial = simplicial.contains(x) && simplicial.contains(y);
        if (!nonadj_bad && dual != both_simplicial) {
          nonadj_bad = "pair " + pair.to_string() + ": dual=" + std::to_string(dual) +
                       " both simplicial=" + std::to_string(both_simplicial);
          nonadj_x = pair;
        }
      }
    }
  out.push_back(quantified("dual.adjacent_pair", instance, g, adj_bad, {{"pair", adj_x}}));
  out.push_back(quantified("dual.nonadjacent_pair", instance, g, nonadj_bad, {{"pair", nonadj_x}}));

  // Solver values against the exhaustive oracle, and the value-level laws.
  std::array<certificate, 4> solved, brute;
  for (std::size_t i = 0; i < 4; ++i) {
    solved[i] = solve(g, d, all_variants[i]);
    brute[i] = brute_force(g, all_variants[i], structural_max_n);
    std::string name(variant_name(all_variants[i]));
    law_report r = make_report("solver.matches_oracle." + name, instance,
                               std::to_string(brute[i].value) + " " + brute[i].witness.to_string(),
                               std::to_string(solved[i].value) + " " +
                                   solved[i].witness.to_string());
    if (r.passed && !verify(g, d, solved[i]))
      r = make_report(r.law, instance, r.expected, "witness fails is_variant_set");
    if (!r.passed)
      r.counterexample = law_payload{g, {{"solver", solved[i].witness}, {"oracle", brute[i].witness}}};
    out.push_back(std::move(r));
  }
  const int gp = solved[0].value, total = solved[1].value, outer = solved[2].value,
            dual = solved[3].value;

  out.push_back(value_report("total.value", instance, g, simplicial.size(), solved[1]));
  out.push_back(value_report("outer.value", instance, g, clique_number(srg), brute[2]));

  {
    std::optional<std::string> bad;
    if (!(gp >= outer && outer >= total && gp >= dual && dual >= total))
      bad = "(gp, outer, dual, total) = " + tuple_string({gp, outer, dual, total});
    out.push_back(quantified("chain.inequalities", instance, g, bad));
  }
  if (n >= 2) {
    std::optional<std::string> bad;
    if (outer < 2)
      bad = "gp_o = " + std::to_string(outer);
    out.push_back(quantified("outer.at_least_two", instance, g, bad, {{"witness", solved[2].witness}}));
  }
  {
    std::optional<std::string> bad;
    if (gp < clique_number(srg))
      bad = "gp = " + std::to_string(gp) + " < omega(G_SR) = " + std::to_string(clique_number(srg));
    out.push_back(quantified("gp.srg_clique_bound", instance, g, bad));
  }
  {
    std::optional<std::string> bad;
    if (dual == 1 && simplicial.size() != 1)
      bad = "gp_d = 1 but s(G) = " + std::to_string(simplicial.size());
    out.push_back(quantified("dual.one_implies_one_simplicial", instance, g, bad,
                             {{"S(G)", simplicial}}));
  }

  // Heredity of gp, total and outer sets: every subset of an optimal witness.
  for (std::size_t i = 0; i < 3; ++i) {
    std::optional<std::string> bad;
    vertex_set bad_y(n);
    auto w = solved[i].witness.members();
    const std::uint32_t sub = std::uint32_t{1} << w.size();
    for (std::uint32_t mask = 0; mask < sub && !bad; ++mask) {
      vertex_set y(n);
      for (std::size_t b = 0; b < w.size(); ++b)
        if (mask >> b & 1u)
          y.insert(w[b]);
      if (!is_variant_set(g, d, y, all_variants[i])) {
        bad = y.to_string() + " is a non-" + std::string(variant_name(all_variants[i])) +
              " subset of " + solved[i].witness.to_string();
        bad_y = y;
      }
    }
    out.push_back(quantified("heredity." + std::string(variant_name(all_variants[i])), instance, g,
                             bad, {{"witness", solved[i].witness}, {"subset", bad_y}}));
  }
  return out;
}

std::vector<law_report> check_sufficient(const graph &g, std::string_view instance) {
  const int n = g.order();
  if (n > sufficient_max_n)
    throw size_error("sufficient-condition laws accept at most " +
                     std::to_string(sufficient_max_n) + " vertices, got " + std::to_string(n));
  require_connected(g, "sufficient-condition instance");
  const dist_matrix d = all_pairs_distances(g);
  const certificate dual = solve(g, d, variant::dual);
  std::vector<law_report> out;

  if (all_edges_p4_inner_isometric(g, d))
    out.push_back(value_report("dual.p4_inner_isometric_zero", instance, g, 0, dual));
  else
    out.push_back(make_report("dual.p4_inner_isometric_zero", instance,
                              "premise not met", "premise not met"));

  const auto gi = girth(g);
  if (gi && *gi >= 6) {
    const bool min_deg_two = g.min_degree() >= 2;
    law_report r = make_report("dual.girth_six", instance,
                               min_deg_two ? "gp_d = 0" : "gp_d >= 1",
                               dual.value == 0 ? "gp_d = 0" : "gp_d >= 1");
    if (!r.passed)
      r.counterexample = law_payload{g, {{"witness", dual.witness}}};
    out.push_back(std::move(r));
  } else {
    out.push_back(make_report("dual.girth_six", instance, "premise not met", "premise not met"));
  }
  {
    std::optional<std::string> bad;
    if (!verify(g, d, dual))
      bad = "dual witness " + dual.witness.to_string() + " is not a dual set";
    out.push_back(quantified("dual.witness_valid", instance, g, bad, {{"witness", dual.witness}}));
  }
  return out;
}

namespace {

// Projections of W onto the factors of G x H (row-major identification).
std::pair<vertex_set, vertex_set> projections(const vertex_set &w, int ng, int nh) {
  vertex_set pg(ng), ph(nh);
  w.for_each([&](vertex v) {
    pg.insert(v / nh);
    ph.insert(v % nh);
  });
  return {pg, ph};
}

bool is_box(const vertex_set &w, const vertex_set &pg, const vertex_set &ph, int nh) {
  return w.size() == pg.size() * ph.size() && [&] {
    bool ok = true;
    pg.for_each([&](vertex a) {
      ph.for_each([&](vertex b) {
        if (!w.contains(a * nh + b))
          ok = false;
      });
    });
    return ok;
  }();
}

} // namespace

std::vector<law_report> check_products(const graph &g, std::string_view g_name, const graph &h,
                                       std::string_view h_name, std::uint64_t seed) {
  const int ng = g.order(), nh = h.order();
  if (ng < 2 || nh < 2)
    throw spec_error("product laws need factors of order at least 2");
  if (ng * nh > products_max_n)
    throw size_error("product laws accept products of order at most " +
                     std::to_string(products_max_n) + ", got " + std::to_string(ng * nh));
  require_connected(g, "product factor");
  require_connected(h, "product factor");
  const std::string instance = std::string(g_name) + " x " + std::string(h_name);
  const graph gh = product(g, h, product_kind::cartesian);
  const dist_matrix dg = all_pairs_distances(g), dh = all_pairs_distances(h),
                    dgh = all_pairs_distances(gh);
  std::vector<law_report> out;

  out.push_back(value_report("product.total_zero", instance, gh, 0, solve(gh, dgh, variant::total)));

  const int outer_g = solve(g, dg, variant::outer).value;
  const int outer_h = solve(h, dh, variant::outer).value;
  out.push_back(value_report("product.outer_min", instance, gh, std::min(outer_g, outer_h),
                             solve(gh, dgh, variant::outer)));

  const certificate dual = solve(gh, dgh, variant::dual);
  const bool g_complete = g.is_complete(), h_complete = h.is_complete();
  const bool g_simplicial = !simplicial_set(g).empty(), h_simplicial = !simplicial_set(h).empty();
  const bool positive = (g_complete && h_simplicial) || (h_complete && g_simplicial);
  {
    law_report r = make_report("product.dual_positive_iff", instance,
                               positive ? "gp_d > 0" : "gp_d = 0",
                               dual.value > 0 ? "gp_d > 0" : "gp_d = 0");
    if (!r.passed)
      r.counterexample = law_payload{gh, {{"witness", dual.witness}}};
    out.push_back(std::move(r));
  }
  int expected_dual = 0;
  if (g_complete && h_complete)
    expected_dual = std::max(ng, nh);
  else if (g_complete && h_simplicial)
    expected_dual = ng;
  else if (h_complete && g_simplicial)
    expected_dual = nh;
  out.push_back(value_report("product.dual_value", instance, gh, expected_dual, dual));
  {
    std::optional<std::string> bad;
    if (!verify(gh, dgh, dual))
      bad = "dual witness " + dual.witness.to_string() + " is not a dual set";
    out.push_back(quantified("product.dual_witness_valid", instance, gh, bad,
                             {{"witness", dual.witness}}));
  }

  // The strong resolving graph of the product is the direct product of the
  // factors' strong resolving graphs, edge for edge under (g, h) -> g*nh + h.
  const graph srg_g = strong_resolving_graph(g, dg), srg_h = strong_resolving_graph(h, dh);
  const graph srg_gh = strong_resolving_graph(gh, dgh);
  const graph direct = product(srg_g, srg_h, product_kind::direct);
  {
    std::optional<std::string> bad;
    if (!(srg_gh == direct)) {
      auto a = srg_gh.edges(), b = direct.edges();
      std::vector<edge> only_a, only_b;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
      bad = std::to_string(only_a.size()) + " edges only in (G x H)_SR, " +
            std::to_string(only_b.size()) + " only in G_SR x H_SR";
    }
    out.push_back(quantified("product.srg_direct", instance, gh, bad));
  }
  {
    law_report r = make_report("product.direct_clique_min", instance,
                               std::to_string(std::min(clique_number(srg_g), clique_number(srg_h))),
                               std::to_string(clique_number(direct)));
    if (!r.passed)
      r.counterexample = law_payload{direct, {}};
    out.push_back(std::move(r));
  }

  // Convex sets of the product are exactly boxes of convex factor sets.
  // Sampled: random subsets, and hulls of random subsets (always convex).
  {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(ng) << 32 | static_cast<std::uint64_t>(nh)));
    const int n = ng * nh;
    std::optional<std::string> bad;
    vertex_set bad_w(n);
    for (int trial = 0; trial < 400 && !bad; ++trial) {
      vertex_set w(n);
      const bool hull_trial = trial % 2 == 1;
      const std::uint64_t density = hull_trial ? 1 + rng() % 3 : 1 + rng() % 8;
      for (vertex v = 0; v < n; ++v)
        if (hull_trial ? rng() % static_cast<std::uint64_t>(n) < density : rng() % 10 < density)
          w.insert(v);
      if (hull_trial)
        w = convex_hull(dgh, w);
      auto [pg, ph] = projections(w, ng, nh);
      const bool convex = is_convex(gh, dgh, w);
      const bool box = w.empty() ||
                       (is_box(w, pg, ph, nh) && is_convex(g, dg, pg) && is_convex(h, dh, ph));
      if (convex != box) {
        bad = "W = " + w.to_string() + ": convex=" + std::to_string(convex) +
              " box of convex sets=" + std::to_string(box);
        bad_w = w;
      }
    }
    out.push_back(quantified("product.convex_boxes", instance, gh, bad, {{"W", bad_w}}));
  }

  // Cited value for two complete factors.
  if (g_complete && h_complete)
    out.push_back(value_report("product.gp_complete", instance, gh, ng + nh - 2,
                               solve(gh, dgh, variant::gp)));
  return out;
}

namespace {

bool theta_dual_zero(const std::vector<int> &l) {
  const std::size_t k = l.size();
  if (k == 2)
    return l[0] + l[1] >= 6;
  if (l[0] == 1)
    return l[1] >= 5;
  if (l[0] == 2)
    return std::none_of(l.begin() + 1, l.end(), [](int x) { return x == 3; });
  return true;
}

void theta_vectors(std::vector<int> &cur, int budget, std::vector<std::vector<int>> &out) {
  // budget: interior vertices still available.
  if (cur.size() >= 2)
    out.push_back(cur);
  const int lo = cur.empty() ? 1 : std::max(cur.back(), cur.size() == 1 ? 2 : 1);
  for (int l = lo; l - 1 <= budget; ++l) {
    cur.push_back(l);
    theta_vectors(cur, budget - (l - 1), out);
    cur.pop_back();
  }
}

std::string spec_name(const family_spec &s) { return s.to_string(); }

// The four invariants of a graph, solver-computed and cross-checked
// against the exhaustive oracle when small enough.
struct quad {
  std::array<certificate, 4> c;
  int operator[](variant v) const { return c[static_cast<std::size_t>(v)].value; }
};

quad solve_all(const graph &g, const dist_matrix &d) {
  quad q;
  for (std::size_t i = 0; i < 4; ++i)
    q.c[i] = solve(g, d, all_variants[i]);
  return q;
}

std::string sets_string(const std::vector<vertex_set> &sets) {
  std::string s = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i)
      s += ", ";
    s += sets[i].to_string();
  }
  return s + "}";
}

} // namespace

std::vector<law_report> check_families(std::uint64_t seed) {
  std::vector<law_report> out;

  // Paths: every invariant is 2, and the optimal sets are pinned down.
  for (int n = 2; n <= 12; ++n) {
    const graph g = path_graph(n);
    const dist_matrix d = all_pairs_distances(g);
    const std::string inst = "path:" + std::to_string(n);
    quad q = solve_all(g, d);
    for (variant v : all_variants)
      out.push_back(value_report("family.path." + std::string(variant_name(v)), inst, g, 2,
                                 q.c[static_cast<std::size_t>(v)]));
    std::vector<vertex_set> dual_expected{vertex_set(n, {0, 1}), vertex_set(n, {0, n - 1}),
                                          vertex_set(n, {n - 2, n - 1})};
    std::sort(dual_expected.begin(), dual_expected.end(), vertex_set::lex_less);
    dual_expected.erase(std::unique(dual_expected.begin(), dual_expected.end()), dual_expected.end());
    out.push_back(make_report("family.path.dual_sets", inst, sets_string(dual_expected),
                              sets_string(enumerate_variant_sets(g, d, variant::dual, 2))));
    const std::string ends = sets_string({vertex_set(n, {0, n - 1})});
    out.push_back(make_report("family.path.outer_sets", inst, ends,
                              sets_string(enumerate_variant_sets(g, d, variant::outer, 2))));
    out.push_back(make_report("family.path.total_sets", inst, ends,
                              sets_string(enumerate_variant_sets(g, d, variant::total, 2))));
  }

  // Trees are block graphs: all four invariants equal s(G), the leaf count.
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 11;
    const std::uint64_t s = seed * 1000 + static_cast<std::uint64_t>(i);
    const graph g = random_tree(n, s);
    const dist_matrix d = all_pairs_distances(g);
    const std::string inst = "tree(n=" + std::to_string(n) + ",seed=" + std::to_string(s) + ")";
    int leaves = 0;
    for (vertex v = 0; v < n; ++v)
      leaves += g.degree(v) == 1;
    quad q = solve_all(g, d);
    for (variant v : all_variants)
      out.push_back(value_report("family.block." + std::string(variant_name(v)), inst, g, leaves,
                                 q.c[static_cast<std::size_t>(v)]));
  }

  // Generalized theta graphs up to 14 vertices.
  {
    std::vector<std::vector<int>> vecs;
    std::vector<int> cur;
    theta_vectors(cur, 12, vecs);
    for (const auto &l : vecs) {
      const family_spec spec{family::theta, l};
      const graph g = generate(spec).g;
      const dist_matrix d = all_pairs_distances(g);
      const certificate c = solve(g, d, variant::dual);
      const bool zero = theta_dual_zero(l);
      law_report r = make_report("family.theta.dual_zero_iff_case", spec_name(spec),
                                 zero ? "gp_d = 0" : "gp_d > 0", c.value == 0 ? "gp_d = 0" : "gp_d > 0");
      if (!r.passed)
        r.counterexample = law_payload{g, {{"witness", c.witness}}};
      out.push_back(std::move(r));
      out.push_back(value_report("family.theta.dual_oracle", spec_name(spec), g,
                                 brute_force(g, variant::dual, 14).value, c));
    }
  }

  // G_m = P_m joined with two isolated vertices.
  for (int m = 3; m <= 9; ++m) {
    const family_spec spec{family::gm_join, {m}};
    const graph g = generate(spec).g;
    const dist_matrix d = all_pairs_distances(g);
    const certificate c = solve(g, d, variant::dual);
    if (m >= 5) {
      out.push_back(value_report("family.gm.dual_zero", spec_name(spec), g, 0, c));
      bool none = true;
      for (auto [x, y] : g.edges())
        none = none && !is_p4_inner_isometric(g, d, x, y);
      out.push_back(make_report("family.gm.no_p4_inner_isometric_edge", spec_name(spec), "none",
                                none ? "none" : "some"));
    }
    out.push_back(value_report("family.gm.dual_oracle", spec_name(spec), g,
                               brute_force(g, variant::dual).value, c));
  }

  // Chains of cycles with a pendant vertex.
  for (int k = 1; k <= 3; ++k)
    for (int l = 4; l <= 7; ++l) {
      const family_spec spec{family::chain_cycles, {k, l}};
      const graph g = generate(spec).g;
      const dist_matrix d = all_pairs_distances(g);
      const int expected = l == 4 ? 2 : l == 5 ? 3 : 1;
      out.push_back(value_report("family.chain_cycles.dual", spec_name(spec), g, expected,
                                 solve(g, d, variant::dual)));
    }

  // Strong products of complete bipartite graphs: gp_o = r1 * r2. The formula
  // needs r >= 2; K_{1,1} = K_2 makes the product a larger clique.
  for (int r1 = 2; r1 <= 3; ++r1)
    for (int t1 = 1; t1 <= r1; ++t1)
      for (int r2 = 2; r2 <= 3; ++r2)
        for (int t2 = 1; t2 <= r2; ++t2) {
          const graph g = product(complete_bipartite_graph(r1, t1), complete_bipartite_graph(r2, t2),
                                  product_kind::strong);
          const std::string inst = "K_{" + std::to_string(r1) + "," + std::to_string(t1) +
                                   "} strong K_{" + std::to_string(r2) + "," + std::to_string(t2) + "}";
          out.push_back(value_report("family.strong_bipartite.outer", inst, g, r1 * r2,
                                     solve(g, variant::outer)));
        }

  // Dual sets are not hereditary: two adjacent vertices of C_5.
  {
    const graph g = cycle_graph(5);
    const dist_matrix d = all_pairs_distances(g);
    std::optional<std::pair<vertex_set, vertex_set>> found;
    for (const auto &x : enumerate_variant_sets(g, d, variant::dual, 2)) {
      x.for_each([&](vertex v) {
        vertex_set y(5, {v});
        if (!found && !is_variant_set(g, d, y, variant::dual))
          found = std::pair{x, y};
      });
      if (found)
        break;
    }
    law_report r = make_report("dual.non_hereditary", "cycle:5", "dual pair with non-dual singleton",
                               found ? "dual pair with non-dual singleton" : "not found");
    if (found)
      r.evidence = law_payload{g, {{"dual set", found->first}, {"non-dual subset", found->second}}};
    else
      r.counterexample = law_payload{g, {}};
    out.push_back(std::move(r));
  }

  // The converse of gp_d = 1 => s = 1 fails: C_4 with a pendant vertex.
  {
    const graph g = graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    const dist_matrix d = all_pairs_distances(g);
    const certificate c = solve(g, d, variant::dual);
    law_report r = make_report("dual.one_converse_fails", "cycle:4 + pendant", "gp_d = 2, s = 1",
                               "gp_d = " + std::to_string(c.value) +
                                   ", s = " + std::to_string(simplicial_set(g).size()));
    if (r.passed)
      r.evidence = law_payload{g, {{"witness", c.witness}, {"S(G)", simplicial_set(g)}}};
    else
      r.counterexample = law_payload{g, {{"witness", c.witness}}};
    out.push_back(std::move(r));
  }
  return out;
}

std::string_view suite_name(law_suite s) {
  switch (s) {
  case law_suite::structural:
    return "structural";
  case law_suite::sufficient:
    return "sufficient";
  case law_suite::products:
    return "products";
  case law_suite::families:
    return "families";
  case law_suite::all:
    return "all";
  }
  return "?";
}

law_suite parse_suite(std::string_view text) {
  for (auto s : {law_suite::structural, law_suite::sufficient, law_suite::products,
                 law_suite::families, law_suite::all})
    if (suite_name(s) == text)
      return s;
  throw spec_error("unknown suite '" + std::string(text) +
                   "' (expected structural, sufficient, products, families or all)");
}

namespace {

graph heawood_graph() {
  std::vector<edge> es;
  for (int i = 0; i < 14; ++i)
    es.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2)
    es.emplace_back(i, (i + 5) % 14);
  return graph::build(14, es);
}

graph with_pendant(const graph &g, vertex at) {
  auto es = g.edges();
  es.emplace_back(at, g.order());
  return graph::build(g.order() + 1, es);
}

std::vector<std::pair<std::string, graph>> named_small_graphs() {
  std::vector<std::pair<std::string, graph>> gs;
  for (const char *s : {"cycle:5", "cycle:4", "cycle:6", "path:5", "complete:4", "star:4",
                        "theta:2,2,2", "theta:1,2,2", "theta:1,3,3", "theta:2,3,4", "gm_join:5",
                        "chain_cycles:1,4", "chain_cycles:1,5", "chain_cycles:2,4",
                        "complete_bipartite:2,3"})
    gs.emplace_back(s, generate(family_spec::parse(s)).g);
  gs.emplace_back("petersen", petersen_graph());
  gs.emplace_back("cycle:4 + pendant", with_pendant(cycle_graph(4), 0));
  return gs;
}

std::vector<law_report> structural_grid(std::uint64_t seed) {
  std::vector<law_report> out;
  for (const auto &[name, g] : named_small_graphs())
    append(out, check_structural(g, name));
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t s = seed * 1000 + static_cast<std::uint64_t>(i);
    append(out, check_structural(random_connected(8, 0.35, s),
                                 "random(8,0.35,seed=" + std::to_string(s) + ")"));
  }
  return out;
}

std::vector<law_report> sufficient_grid(std::uint64_t seed) {
  std::vector<law_report> out;
  for (int n = 3; n <= 12; ++n)
    append(out, check_sufficient(cycle_graph(n), "cycle:" + std::to_string(n)));
  append(out, check_sufficient(with_pendant(cycle_graph(6), 0), "cycle:6 + pendant"));
  append(out, check_sufficient(heawood_graph(), "heawood"));
  append(out, check_sufficient(petersen_graph(), "petersen"));
  for (const char *s : {"gm_join:5", "gm_join:6", "gm_join:7", "theta:3,3,3", "theta:1,5,5",
                        "theta:2,4,4", "chain_cycles:2,6", "complete_bipartite:3,3"})
    append(out, check_sufficient(generate(family_spec::parse(s)).g, s));
  for (int i = 0; i < 30; ++i) {
    const std::uint64_t s = seed * 1000 + static_cast<std::uint64_t>(i);
    const int n = 6 + i % 7;
    append(out, check_sufficient(random_connected(n, 0.3, s),
                                 "random(" + std::to_string(n) + ",0.3,seed=" + std::to_string(s) + ")"));
  }
  return out;
}

std::vector<law_report> products_grid(std::uint64_t seed) {
  std::vector<law_report> out;
  const std::vector<std::pair<std::string, graph>> factors{
      {"P_2", path_graph(2)},     {"P_3", path_graph(3)},     {"P_4", path_graph(4)},
      {"C_4", cycle_graph(4)},    {"C_5", cycle_graph(5)},    {"K_3", complete_graph(3)},
      {"K_4", complete_graph(4)},
  };
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j)
      if (factors[i].second.order() * factors[j].second.order() <= products_max_n)
        append(out, check_products(factors[i].second, factors[i].first, factors[j].second,
                                   factors[j].first, seed));
  for (int a = 2; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      append(out, check_products(complete_graph(a), "K_" + std::to_string(a), complete_graph(b),
                                 "K_" + std::to_string(b), seed));
  // K_3 x K_6: the four invariants pairwise distinct.
  {
    const graph g = product(complete_graph(3), complete_graph(6), product_kind::cartesian);
    const dist_matrix d = all_pairs_distances(g);
    quad q = solve_all(g, d);
    out.push_back(make_report("product.kn_k2n_quadruple", "K_3 x K_6", "(gp, dual, outer, total) = (7, 6, 3, 0)",
                              "(gp, dual, outer, total) = " +
                                  tuple_string({q[variant::gp], q[variant::dual], q[variant::outer],
                                                q[variant::total]})));
    append(out, check_products(complete_graph(3), "K_3", complete_graph(6), "K_6", seed));
  }
  return out;
}

} // namespace

std::vector<law_report> run_suite(law_suite s, std::uint64_t seed) {
  std::vector<law_report> out;
  if (s == law_suite::structural || s == law_suite::all)
    append(out, structural_grid(seed));
  if (s == law_suite::sufficient || s == law_suite::all)
    append(out, sufficient_grid(seed));
  if (s == law_suite::products || s == law_suite::all)
    append(out, products_grid(seed));
  if (s == law_suite::families || s == law_suite::all)
    append(out, check_families(seed));
  std::stable_sort(out.begin(), out.end(),
                   [](const law_report &a, const law_report &b) { return a.law < b.law; });
  return out;
}

} // namespace gpv
