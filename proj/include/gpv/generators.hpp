#pragma once

#include "gpv/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gpv {

enum class family {
  path,               // path:n
  cycle,              // cycle:n, n >= 3
  complete,           // complete:n
  complete_bipartite, // complete_bipartite:r,t
  edgeless,           // edgeless:n
  star,               // star:k  (K_{1,k})
  theta,              // theta:l1,...,lk
  gm_join,            // gm_join:m  (P_m joined with two isolated vertices)
  chain_cycles,       // chain_cycles:k,l
};

struct family_spec {
  family kind = family::path;
  std::vector<int> params;

  /// Parses "family:p1,p2,...". Throws spec_error on malformed text.
  static family_spec parse(std::string_view text);
  std::string to_string() const;
};

std::string_view family_name(family f);

/// A generated graph plus names for its distinguished vertices.
struct labeled_graph {
  graph g;
  std::map<std::string, vertex> labels;
};

/// Throws spec_error when params do not fit the family.
labeled_graph generate(const family_spec &spec);

graph path_graph(int n);
graph cycle_graph(int n);
graph complete_graph(int n);
graph complete_bipartite_graph(int r, int t);
graph edgeless_graph(int n);
graph star_graph(int k);
graph petersen_graph();

enum class product_kind { cartesian, direct, strong };

std::string_view product_name(product_kind k);
product_kind parse_product_kind(std::string_view text);

/// Vertex (g, h) gets index g * |V(H)| + h.
graph product(const graph &g, const graph &h, product_kind kind);

/// Disjoint union of g and h (h shifted by |V(g)|) plus every g-h edge.
graph join(const graph &g, const graph &h);

/// Erdos-Renyi G(n, p) redrawn until connected. Deterministic in (n, p, seed).
/// Throws generation_error once the retry budget runs out.
graph random_connected(int n, double p, std::uint64_t seed, int max_attempts = 1000);

/// Uniform labelled tree on n vertices from a random Pruefer sequence.
graph random_tree(int n, std::uint64_t seed);

} // namespace gpv
