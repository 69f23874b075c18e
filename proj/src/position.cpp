#include "gpv/position.hpp"

#include "gpv/errors.hpp"
#include "gpv/srg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gpv {

std::string_view variant_name(variant v) {
  switch (v) {
  case variant::gp:
    return "gp";
  case variant::total:
    return "total";
  case variant::outer:
    return "outer";
  case variant::dual:
    return "dual";
  }
  return "?";
}

variant parse_variant(std::string_view text) {
  for (variant v : all_variants)
    if (variant_name(v) == text)
      return v;
  throw spec_error("unknown invariant '" + std::string(text) +
                   "' (expected gp, total, outer or dual)");
}

std::string_view method_name(method m) {
  switch (m) {
  case method::closed_form:
    return "closed_form";
  case method::clique:
    return "clique";
  case method::branch_and_bound:
    return "branch_and_bound";
  case method::exhaustive:
    return "exhaustive";
  }
  return "?";
}

bool is_positionable(const dist_matrix &d, const vertex_set &x, vertex u, vertex v) {
  if (u == v)
    throw degenerate_pair_error("positionability needs distinct vertices, got " +
                                std::to_string(u) + " twice");
  bool ok = true;
  x.for_each([&](vertex w) {
    if (ok && w != u && w != v && lies_between(d, u, w, v))
      ok = false;
  });
  return ok;
}

namespace {

bool all_pairs_positionable(const dist_matrix &d, const vertex_set &x,
                            const std::vector<vertex> &a, const std::vector<vertex> &b,
                            bool same_side) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = same_side ? i + 1 : 0; j < b.size(); ++j)
      if (!is_positionable(d, x, a[i], b[j]))
        return false;
  return true;
}

} // namespace

bool is_variant_set(const graph &g, const dist_matrix &d, const vertex_set &x, variant kind) {
  if (x.universe() != g.order())
    throw index_error("vertex set universe does not match graph order");
  auto inside = x.members();
  if (!all_pairs_positionable(d, x, inside, inside, true))
    return false;
  switch (kind) {
  case variant::gp:
    return true;
  case variant::total: {
    auto everyone = vertex_set::full(g.order()).members();
    return all_pairs_positionable(d, x, everyone, everyone, true);
  }
  case variant::outer: {
    auto outside = x.complement().members();
    return all_pairs_positionable(d, x, inside, outside, false);
  }
  case variant::dual: {
    auto outside = x.complement().members();
    return all_pairs_positionable(d, x, outside, outside, true);
  }
  }
  return false;
}

namespace {

// Precomputed betweenness data for the exact search.
struct conflict_table {
  int n = 0;
  std::vector<vertex_set> interval;
  // blocked[x*n+v]: vertices c that form a conflict triple with x and v
  // (one of the three lies on a shortest path between the other two).
  std::vector<vertex_set> blocked;

  explicit conflict_table(const dist_matrix &d) : n(d.order()) {
    const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    interval.assign(nn, vertex_set(n));
    blocked.assign(nn, vertex_set(n));
    for (vertex u = 0; u < n; ++u)
      for (vertex v = 0; v < n; ++v)
        interval[at(u, v)] = gpv::interval(d, u, v);
    for (vertex x = 0; x < n; ++x)
      for (vertex v = 0; v < n; ++v) {
        if (x == v)
          continue;
        auto &b = blocked[at(x, v)];
        for (vertex c = 0; c < n; ++c) {
          if (c == x || c == v)
            continue;
          if (lies_between(d, x, c, v) || lies_between(d, x, v, c) || lies_between(d, v, x, c))
            b.insert(c);
        }
      }
  }

  std::size_t at(vertex u, vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
  }
};

// Depth-first branch and bound over include/exclude decisions. Members of
// `in` are pairwise conflict free; every vertex that would create a conflict
// triple is moved out of the undecided pool immediately. With convex_out the
// excluded vertices are kept closed under geodesic intervals, so an excluded
// region that swallows a chosen vertex cuts the branch.
class position_search {
public:
  position_search(const conflict_table &ct, bool convex_out, std::vector<vertex> order)
      : ct_(ct), convex_out_(convex_out), order_(std::move(order)), best_(ct.n) {}

  // Largest feasible set of size > floor, stopping at the first one that
  // reaches stop_at. Returns false if nothing beats floor.
  bool run(int floor, int stop_at) {
    best_size_ = floor;
    stop_at_ = stop_at;
    done_ = false;
    found_ = false;
    vertex_set in(ct_.n), out(ct_.n);
    dfs(in, 0, out, vertex_set::full(ct_.n), 0);
    return found_;
  }

  const vertex_set &best() const { return best_; }
  int best_size() const { return best_size_; }

private:
  // Adds `fresh` to the convex excluded set; false if it runs into `in`.
  bool close_out(vertex_set &out, vertex_set fresh, const vertex_set &in) const {
    fresh -= out;
    if (!convex_out_) {
      out |= fresh;
      return true;
    }
    std::vector<vertex> work = fresh.members();
    out |= fresh;
    while (!work.empty()) {
      vertex w = work.back();
      work.pop_back();
      vertex_set grown(ct_.n);
      out.for_each([&](vertex u) {
        if (u != w)
          grown |= ct_.interval[ct_.at(u, w)];
      });
      grown -= out;
      if (grown.empty())
        continue;
      if (grown.intersects(in))
        return false;
      grown.for_each([&](vertex x) { work.push_back(x); });
      out |= grown;
    }
    return !out.intersects(in);
  }

  void dfs(const vertex_set &in, int in_size, const vertex_set &out, const vertex_set &undecided,
           std::size_t cursor) {
    if (done_)
      return;
    const int open = undecided.size();
    if (in_size + open <= best_size_)
      return;
    if (open == 0) {
      best_ = in;
      best_size_ = in_size;
      found_ = true;
      if (best_size_ >= stop_at_)
        done_ = true;
      return;
    }
    while (!undecided.contains(order_[cursor]))
      ++cursor;
    const vertex v = order_[cursor];

    {
      vertex_set in2 = in;
      in2.insert(v);
      vertex_set forced(ct_.n);
      in.for_each([&](vertex x) { forced |= ct_.blocked[ct_.at(x, v)]; });
      forced &= undecided;
      vertex_set out2 = out;
      if (close_out(out2, forced, in2)) {
        vertex_set und2 = undecided - out2;
        und2.erase(v);
        dfs(in2, in_size + 1, out2, und2, cursor + 1);
      }
    }
    if (done_)
      return;
    {
      vertex_set out2 = out;
      if (close_out(out2, vertex_set(ct_.n, {v}), in)) {
        vertex_set und2 = undecided - out2;
        dfs(in, in_size, out2, und2, cursor + 1);
      }
    }
  }

  const conflict_table &ct_;
  bool convex_out_;
  std::vector<vertex> order_;
  vertex_set best_;
  int best_size_ = 0;
  int stop_at_ = 0;
  bool done_ = false;
  bool found_ = false;
};

certificate exact_search(const dist_matrix &d, variant kind) {
  const int n = d.order();
  const bool convex_out = kind == variant::dual;
  conflict_table ct(d);

  // Value first, branching on peripheral vertices early.
  std::vector<vertex> by_ecc(static_cast<std::size_t>(n));
  std::iota(by_ecc.begin(), by_ecc.end(), 0);
  std::stable_sort(by_ecc.begin(), by_ecc.end(),
                   [&](vertex a, vertex b) { return d.eccentricity(a) > d.eccentricity(b); });
  position_search value_pass(ct, convex_out, by_ecc);
  int value = value_pass.run(-1, n) ? value_pass.best_size() : 0;

  // Then the lexicographically least set of that size: with ascending order
  // and include-first branching, the first hit is the least one.
  std::vector<vertex> ascending(static_cast<std::size_t>(n));
  std::iota(ascending.begin(), ascending.end(), 0);
  position_search lex_pass(ct, convex_out, ascending);
  certificate c{kind, value, vertex_set(n), method::branch_and_bound};
  if (value > 0 && lex_pass.run(value - 1, value))
    c.witness = lex_pass.best();
  return c;
}

void require_connected(const graph &g) {
  if (g.order() == 0)
    throw disconnected_error("invariants are undefined on the empty graph");
  if (!is_connected(g))
    throw disconnected_error("graph is disconnected");
}

// Visits k-subsets of 0..n-1 in lexicographic order until f returns true.
template <class F> bool first_combination(int n, int k, F &&f) {
  std::vector<vertex> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(vertex_set(n, idx)))
      return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

} // namespace

certificate solve(const graph &g, variant kind) {
  require_connected(g);
  return solve(g, all_pairs_distances(g), kind);
}

certificate solve(const graph &g, const dist_matrix &d, variant kind) {
  require_connected(g);
  switch (kind) {
  case variant::total: {
    vertex_set s = simplicial_set(g);
    return {kind, s.size(), s, method::closed_form};
  }
  case variant::outer: {
    vertex_set k = maximum_clique(strong_resolving_graph(g, d));
    return {kind, k.size(), k, method::clique};
  }
  case variant::gp:
  case variant::dual:
    return exact_search(d, kind);
  }
  throw spec_error("unhandled variant");
}

certificate brute_force(const graph &g, variant kind, int max_n) {
  if (g.order() > max_n)
    throw size_error("exhaustive search limited to " + std::to_string(max_n) + " vertices, graph has " +
                     std::to_string(g.order()));
  require_connected(g);
  const int n = g.order();
  const dist_matrix d = all_pairs_distances(g);
  certificate c{kind, 0, vertex_set(n), method::exhaustive};
  for (int k = n; k > 0; --k) {
    bool hit = first_combination(n, k, [&](const vertex_set &x) {
      if (!is_variant_set(g, d, x, kind))
        return false;
      c.value = k;
      c.witness = x;
      return true;
    });
    if (hit)
      break;
  }
  return c;
}

std::vector<vertex_set> enumerate_variant_sets(const graph &g, const dist_matrix &d, variant kind,
                                               int cardinality) {
  std::vector<vertex_set> out;
  const int n = g.order();
  if (cardinality < 0 || cardinality > n)
    return out;
  first_combination(n, cardinality, [&](const vertex_set &x) {
    if (is_variant_set(g, d, x, kind))
      out.push_back(x);
    return false;
  });
  return out;
}

bool verify(const graph &g, const dist_matrix &d, const certificate &c) {
  return c.witness.universe() == g.order() && c.witness.size() == c.value &&
         is_variant_set(g, d, c.witness, c.kind);
}

} // namespace gpv
