#include "gpv/metric.hpp"

#include "gpv/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace gpv {

int dist_matrix::eccentricity(vertex v) const {
  int e = 0;
  for (vertex u = 0; u < n_; ++u)
    e = std::max(e, (*this)(v, u));
  return e;
}

dist_matrix all_pairs_distances(const graph &g) {
  const int n = g.order();
  if (n == 0)
    throw disconnected_error("distances are undefined on the empty graph");
  dist_matrix dm;
  dm.n_ = n;
  dm.d_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  std::vector<vertex> queue(static_cast<std::size_t>(n));
  for (vertex s = 0; s < n; ++s) {
    int *row = dm.d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    row[s] = 0;
    while (head < tail) {
      vertex u = queue[head++];
      for (vertex w : g.neighbors(u))
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
    }
    if (tail != static_cast<std::size_t>(n))
      throw disconnected_error("graph is disconnected: vertex " + std::to_string(s) + " reaches " +
                               std::to_string(tail) + " of " + std::to_string(n) + " vertices");
    dm.diameter_ = std::max(dm.diameter_, row[queue[tail - 1]]);
  }
  return dm;
}

std::optional<int> girth(const graph &g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<vertex> parent(static_cast<std::size_t>(n));
  for (vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<vertex> q;
    q.push(s);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    while (!q.empty()) {
      vertex u = q.front();
      q.pop();
      for (vertex w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        auto ui = static_cast<std::size_t>(u);
        if (dist[wi] < 0) {
          dist[wi] = dist[ui] + 1;
          parent[wi] = u;
          q.push(w);
        } else if (parent[ui] != w) {
          int len = dist[ui] + dist[wi] + 1;
          if (!best || len < *best)
            best = len;
        }
      }
    }
  }
  return best;
}

bool lies_between(const dist_matrix &d, vertex u, vertex w, vertex v) {
  if (u == v)
    throw degenerate_pair_error("betweenness needs distinct endpoints, got " + std::to_string(u) +
                                " twice");
  return d(u, w) + d(w, v) == d(u, v);
}

vertex_set interval(const dist_matrix &d, vertex u, vertex v) {
  const int n = d.order();
  vertex_set out(n);
  const int duv = d(u, v);
  for (vertex w = 0; w < n; ++w)
    if (d(u, w) + d(w, v) == duv)
      out.insert(w);
  return out;
}

vertex_set interval_interior(const dist_matrix &d, vertex u, vertex v) {
  vertex_set out = interval(d, u, v);
  out.erase(u);
  out.erase(v);
  return out;
}

bool is_convex(const graph &g, const dist_matrix &d, const vertex_set &w) {
  if (w.universe() != g.order())
    throw index_error("vertex set universe does not match graph order");
  auto members = w.members();
  const int n = g.order();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      vertex u = members[i], v = members[j];
      const int duv = d(u, v);
      if (duv <= 1)
        continue;
      for (vertex x = 0; x < n; ++x)
        if (!w.contains(x) && d(u, x) + d(x, v) == duv)
          return false;
    }
  return true;
}

vertex_set convex_hull(const dist_matrix &d, const vertex_set &w) {
  vertex_set hull = w;
  std::vector<vertex> work = w.members();
  while (!work.empty()) {
    vertex v = work.back();
    work.pop_back();
    hull.for_each([&](vertex u) {
      if (u == v)
        return;
      vertex_set fresh = interval(d, u, v) - hull;
      fresh.for_each([&](vertex x) { work.push_back(x); });
      hull |= fresh;
    });
  }
  return hull;
}

vertex_set simplicial_set(const graph &g) {
  const int n = g.order();
  vertex_set s(n);
  for (vertex v = 0; v < n; ++v) {
    const auto &nb = g.neighbors(v);
    bool clique = true;
    for (std::size_t i = 0; clique && i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) {
          clique = false;
          break;
        }
    if (clique)
      s.insert(v);
  }
  return s;
}

vertex_set simplicial_set(const graph &g, const dist_matrix &d) {
  const int n = g.order();
  vertex_set s(n);
  for (vertex v = 0; v < n; ++v) {
    const auto &nb = g.neighbors(v);
    bool ok = true;
    for (std::size_t i = 0; ok && i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (d(nb[i], nb[j]) == 2) {
          ok = false;
          break;
        }
    if (ok)
      s.insert(v);
  }
  return s;
}

bool is_p4_inner_isometric(const graph &g, const dist_matrix &d, vertex x, vertex y) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !g.adjacent(x, y))
    throw not_an_edge_error("(" + std::to_string(x) + ", " + std::to_string(y) +
                            ") is not an edge");
  for (vertex xp : g.neighbors(x)) {
    if (xp == y || d(xp, y) != 2)
      continue;
    for (vertex yp : g.neighbors(y))
      if (yp != x && d(x, yp) == 2 && d(xp, yp) == 3)
        return true;
  }
  return false;
}

bool all_edges_p4_inner_isometric(const graph &g, const dist_matrix &d) {
  auto es = g.edges();
  if (es.empty())
    return false;
  return std::all_of(es.begin(), es.end(),
                     [&](const edge &e) { return is_p4_inner_isometric(g, d, e.first, e.second); });
}

} // namespace gpv
