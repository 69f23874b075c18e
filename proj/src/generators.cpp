#include "gpv/generators.hpp"

#include "gpv/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <set>

namespace gpv {

namespace {

constexpr std::array<std::pair<family, std::string_view>, 9> family_names{{
    {family::path, "path"},
    {family::cycle, "cycle"},
    {family::complete, "complete"},
    {family::complete_bipartite, "complete_bipartite"},
    {family::edgeless, "edgeless"},
    {family::star, "star"},
    {family::theta, "theta"},
    {family::gm_join, "gm_join"},
    {family::chain_cycles, "chain_cycles"},
}};

void require(bool ok, const family_spec &spec, std::string_view why) {
  if (!ok)
    throw spec_error(spec.to_string() + ": " + std::string(why));
}

void require_arity(const family_spec &spec, std::size_t arity) {
  require(spec.params.size() == arity, spec,
          "expects " + std::to_string(arity) + " parameter(s), got " +
              std::to_string(spec.params.size()));
}

labeled_graph theta_graph(const family_spec &spec) {
  const auto &len = spec.params;
  require(len.size() >= 2, spec, "theta needs at least two path lengths");
  require(std::is_sorted(len.begin(), len.end()), spec, "theta lengths must be non-decreasing");
  require(len.front() >= 1, spec, "theta lengths must be positive");
  require(len[1] >= 2, spec, "at most one theta path may have length 1 (no multi-edges)");
  // a = 0, b = 1, then the interior vertices of each path in order.
  std::vector<edge> es;
  int next = 2;
  for (int l : len) {
    if (l == 1) {
      es.emplace_back(0, 1);
      continue;
    }
    vertex prev = 0;
    for (int i = 1; i < l; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, 1);
  }
  return {graph::build(next, es), {{"a", 0}, {"b", 1}}};
}

labeled_graph gm_join_graph(const family_spec &spec) {
  require_arity(spec, 1);
  const int m = spec.params[0];
  require(m >= 1, spec, "path order must be positive");
  graph g = join(path_graph(m), edgeless_graph(2));
  return {std::move(g), {{"p_1", 0}, {"p_m", m - 1}, {"x", m}, {"x'", m + 1}}};
}

labeled_graph chain_of_cycles(const family_spec &spec) {
  require_arity(spec, 2);
  const int k = spec.params[0];
  const int l = spec.params[1];
  require(k >= 1, spec, "need at least one cycle");
  require(l >= 4, spec, "cycle length must be at least 4");
  // Each cycle is entered at one vertex and left at the vertex floor(l/2)
  // steps further along; the next cycle (or the pendant) hangs off that exit.
  std::vector<edge> es;
  vertex entry = 0;
  int next = 1;
  vertex exit = -1;
  for (int c = 0; c < k; ++c) {
    vertex prev = entry;
    vertex first_new = next;
    for (int i = 1; i < l; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    es.emplace_back(prev, entry);
    exit = first_new + l / 2 - 1;
    entry = exit;
  }
  const vertex pendant = next++;
  es.emplace_back(exit, pendant);
  return {graph::build(next, es), {{"u", pendant}, {"v", exit}}};
}

} // namespace

std::string_view family_name(family f) {
  for (auto [k, name] : family_names)
    if (k == f)
      return name;
  return "?";
}

family_spec family_spec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw spec_error("family spec '" + std::string(text) + "' lacks ':' (expected family:p1,p2,...)");
  auto name = text.substr(0, colon);
  family_spec spec;
  auto it = std::find_if(family_names.begin(), family_names.end(),
                         [&](const auto &e) { return e.second == name; });
  if (it == family_names.end())
    throw spec_error("unknown graph family '" + std::string(name) + "'");
  spec.kind = it->first;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      throw spec_error("bad parameter '" + std::string(tok) + "' in '" + std::string(text) + "'");
    spec.params.push_back(value);
    if (comma == std::string_view::npos)
      break;
    rest = rest.substr(comma + 1);
    if (rest.empty())
      throw spec_error("trailing ',' in '" + std::string(text) + "'");
  }
  return spec;
}

std::string family_spec::to_string() const {
  std::string s(family_name(kind));
  s += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(params[i]);
  }
  return s;
}

labeled_graph generate(const family_spec &spec) {
  const auto &p = spec.params;
  switch (spec.kind) {
  case family::path:
    require_arity(spec, 1);
    require(p[0] >= 1, spec, "order must be positive");
    return {path_graph(p[0]), {}};
  case family::cycle:
    require_arity(spec, 1);
    require(p[0] >= 3, spec, "cycle order must be at least 3");
    return {cycle_graph(p[0]), {}};
  case family::complete:
    require_arity(spec, 1);
    require(p[0] >= 1, spec, "order must be positive");
    return {complete_graph(p[0]), {}};
  case family::complete_bipartite:
    require_arity(spec, 2);
    require(p[0] >= 1 && p[1] >= 1, spec, "both parts must be nonempty");
    return {complete_bipartite_graph(p[0], p[1]), {}};
  case family::edgeless:
    require_arity(spec, 1);
    require(p[0] >= 1, spec, "order must be positive");
    return {edgeless_graph(p[0]), {}};
  case family::star:
    require_arity(spec, 1);
    require(p[0] >= 1, spec, "star needs at least one leaf");
    return {star_graph(p[0]), {{"center", 0}}};
  case family::theta:
    return theta_graph(spec);
  case family::gm_join:
    return gm_join_graph(spec);
  case family::chain_cycles:
    return chain_of_cycles(spec);
  }
  throw spec_error("unhandled family");
}

graph path_graph(int n) {
  std::vector<edge> es;
  for (int i = 0; i + 1 < n; ++i)
    es.emplace_back(i, i + 1);
  return graph::build(n, es);
}

graph cycle_graph(int n) {
  std::vector<edge> es;
  for (int i = 0; i < n; ++i)
    es.emplace_back(i, (i + 1) % n);
  return graph::build(n, es);
}

graph complete_graph(int n) {
  std::vector<edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      es.emplace_back(i, j);
  return graph::build(n, es);
}

graph complete_bipartite_graph(int r, int t) {
  std::vector<edge> es;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j)
      es.emplace_back(i, r + j);
  return graph::build(r + t, es);
}

graph edgeless_graph(int n) { return graph::build(n, {}); }

graph star_graph(int k) { return complete_bipartite_graph(1, k); }

graph petersen_graph() {
  std::vector<edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  return graph::build(10, es);
}

std::string_view product_name(product_kind k) {
  switch (k) {
  case product_kind::cartesian:
    return "cartesian";
  case product_kind::direct:
    return "direct";
  case product_kind::strong:
    return "strong";
  }
  return "?";
}

product_kind parse_product_kind(std::string_view text) {
  for (auto k : {product_kind::cartesian, product_kind::direct, product_kind::strong})
    if (product_name(k) == text)
      return k;
  throw spec_error("unknown product kind '" + std::string(text) +
                   "' (expected cartesian, direct or strong)");
}

graph product(const graph &g, const graph &h, product_kind kind) {
  const int ng = g.order(), nh = h.order();
  auto id = [nh](vertex a, vertex b) { return a * nh + b; };
  const bool cart = kind != product_kind::direct;
  const bool direct = kind != product_kind::cartesian;
  std::vector<edge> es;
  for (vertex a = 0; a < ng; ++a)
    for (vertex b = 0; b < nh; ++b)
      for (vertex c = 0; c < ng; ++c)
        for (vertex d = 0; d < nh; ++d) {
          if (id(a, b) >= id(c, d))
            continue;
          bool gg = g.adjacent(a, c), hh = h.adjacent(b, d);
          bool adjacent = (cart && ((gg && b == d) || (a == c && hh))) || (direct && gg && hh);
          if (adjacent)
            es.emplace_back(id(a, b), id(c, d));
        }
  return graph::build(ng * nh, es);
}

graph join(const graph &g, const graph &h) {
  const int ng = g.order(), nh = h.order();
  std::vector<edge> es = g.edges();
  for (auto [u, v] : h.edges())
    es.emplace_back(ng + u, ng + v);
  for (vertex u = 0; u < ng; ++u)
    for (vertex v = 0; v < nh; ++v)
      es.emplace_back(u, ng + v);
  return graph::build(ng + nh, es);
}

graph random_connected(int n, double p, std::uint64_t seed, int max_attempts) {
  if (n < 1)
    throw spec_error("random graph needs n >= 1");
  if (!(p > 0.0 && p <= 1.0))
    throw spec_error("edge probability must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  // Raw 53-bit draws keep the stream identical across standard libraries.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<edge> es;
    for (vertex u = 0; u < n; ++u)
      for (vertex v = u + 1; v < n; ++v)
        if (coin())
          es.emplace_back(u, v);
    graph g = graph::build(n, es);
    if (is_connected(g))
      return g;
  }
  throw generation_error("no connected G(" + std::to_string(n) + ", " + std::to_string(p) +
                         ") sample in " + std::to_string(max_attempts) + " attempts");
}

graph random_tree(int n, std::uint64_t seed) {
  if (n < 1)
    throw spec_error("tree needs n >= 1");
  if (n <= 2)
    return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<vertex> code(static_cast<std::size_t>(n - 2));
  for (auto &c : code)
    c = static_cast<vertex>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (vertex c : code)
    ++deg[static_cast<std::size_t>(c)];
  std::set<vertex> leaves;
  for (vertex v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1)
      leaves.insert(v);
  std::vector<edge> es;
  for (vertex c : code) {
    vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(leaf, c);
    if (--deg[static_cast<std::size_t>(c)] == 1)
      leaves.insert(c);
  }
  vertex a = *leaves.begin();
  vertex b = *std::next(leaves.begin());
  es.emplace_back(a, b);
  return graph::build(n, es);
}

} // namespace gpv
