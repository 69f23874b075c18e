#include "gpv/graph.hpp"

#include "gpv/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gpv {

graph graph::build(int n, std::span<const edge> edges) {
  if (n < 0)
    throw index_error("negative vertex count");
  graph g;
  g.n_ = n;
  g.adj_.resize(static_cast<std::size_t>(n));
  g.nbr_.assign(static_cast<std::size_t>(n), vertex_set(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw index_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw loop_error("self-loop at vertex " + std::to_string(u));
    if (g.nbr_[static_cast<std::size_t>(u)].contains(v))
      throw duplicate_edge_error("duplicate edge (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ")");
    g.nbr_[static_cast<std::size_t>(u)].insert(v);
    g.nbr_[static_cast<std::size_t>(v)].insert(u);
    ++g.m_;
  }
  for (vertex v = 0; v < n; ++v)
    g.adj_[static_cast<std::size_t>(v)] = g.nbr_[static_cast<std::size_t>(v)].members();
  return g;
}

int graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (vertex v = 0; v < n_; ++v)
    best = std::min(best, degree(v));
  return best;
}

std::vector<edge> graph::edges() const {
  std::vector<edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (vertex u = 0; u < n_; ++u)
    for (vertex v : neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

induced_result induced_subgraph(const graph &g, const vertex_set &keep) {
  if (keep.universe() != g.order())
    throw index_error("vertex set universe does not match graph order");
  if (keep.empty())
    throw empty_set_error("induced subgraph of an empty vertex set");
  induced_result r;
  r.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  r.new_to_old = keep.members();
  for (std::size_t i = 0; i < r.new_to_old.size(); ++i)
    r.old_to_new[static_cast<std::size_t>(r.new_to_old[i])] = static_cast<vertex>(i);
  std::vector<edge> es;
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      es.emplace_back(r.old_to_new[static_cast<std::size_t>(u)],
                      r.old_to_new[static_cast<std::size_t>(v)]);
  r.subgraph = graph::build(static_cast<int>(r.new_to_old.size()), es);
  return r;
}

bool is_connected(const graph &g) {
  const int n = g.order();
  if (n <= 1)
    return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    vertex u = q.front();
    q.pop();
    for (vertex w : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == n;
}

namespace {

// Bron-Kerbosch with Tomita pivoting. Branches that cannot reach the current
// best size are cut; equal-size cliques are still visited for tie-breaking.
struct clique_search {
  const graph &g;
  vertex_set best;
  int best_size = 0;

  void expand(vertex_set &r, int r_size, vertex_set p, vertex_set x) {
    if (p.empty() && x.empty()) {
      if (r_size > best_size || (r_size == best_size && vertex_set::lex_less(r, best))) {
        best = r;
        best_size = r_size;
      }
      return;
    }
    if (r_size + p.size() < best_size)
      return;
    vertex pivot = -1;
    int pivot_hits = -1;
    (p | x).for_each([&](vertex u) {
      int hits = (p & g.neighborhood(u)).size();
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    });
    vertex_set branch = p - g.neighborhood(pivot);
    branch.for_each([&](vertex v) {
      r.insert(v);
      expand(r, r_size + 1, p & g.neighborhood(v), x & g.neighborhood(v));
      r.erase(v);
      p.erase(v);
      x.insert(v);
    });
  }
};

} // namespace

vertex_set maximum_clique(const graph &g) {
  const int n = g.order();
  if (n == 0)
    return vertex_set(0);
  clique_search s{g, vertex_set(n), 0};
  vertex_set r(n);
  s.expand(r, 0, vertex_set::full(n), vertex_set(n));
  return s.best;
}

int clique_number(const graph &g) { return maximum_clique(g).size(); }

} // namespace gpv
