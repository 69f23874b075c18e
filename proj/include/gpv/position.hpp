#pragma once

#include "gpv/graph.hpp"
#include "gpv/metric.hpp"

#include <string_view>
#include <vector>

namespace gpv {

/// Which pairs of vertices must be X-positionable.
///   gp:    pairs inside X
///   total: all pairs of V(G)
///   outer: pairs inside X and pairs with one end in X, one outside
///   dual:  pairs inside X and pairs inside the complement of X
enum class variant { gp, total, outer, dual };

inline constexpr variant all_variants[] = {variant::gp, variant::total, variant::outer,
                                           variant::dual};

std::string_view variant_name(variant v);
/// Accepts "gp", "total", "outer", "dual"; throws spec_error otherwise.
variant parse_variant(std::string_view text);

enum class method { closed_form, clique, branch_and_bound, exhaustive };

std::string_view method_name(method m);

/// An invariant value with a set attaining it.
struct certificate {
  variant kind = variant::gp;
  int value = 0;
  vertex_set witness;
  method how = method::exhaustive;
};

/// No vertex of X other than u, v lies on a shortest u,v-path.
/// Throws degenerate_pair_error for u == v.
bool is_positionable(const dist_matrix &d, const vertex_set &x, vertex u, vertex v);

/// Checks the variant's quantifier pattern literally through is_positionable.
bool is_variant_set(const graph &g, const dist_matrix &d, const vertex_set &x, variant kind);

/// Exact optimum with a witness; the witness is the lexicographically least
/// optimal set. Throws disconnected_error unless g is connected with n >= 1.
///
///   total  S(G)
///   outer  maximum clique of the strong resolving graph
///   gp     branch and bound over the betweenness conflict triples
///   dual   the same search restricted to sets whose complement is convex
certificate solve(const graph &g, variant kind);
certificate solve(const graph &g, const dist_matrix &d, variant kind);

/// Exhaustive search straight from the definitions, largest size first.
/// Throws size_error when g has more than max_n vertices.
certificate brute_force(const graph &g, variant kind, int max_n = 18);

/// Every variant set of the given cardinality, in lexicographic order. Exhaustive.
std::vector<vertex_set> enumerate_variant_sets(const graph &g, const dist_matrix &d, variant kind,
                                               int cardinality);

/// Witness size equals value and the witness is a set of the claimed variant.
bool verify(const graph &g, const dist_matrix &d, const certificate &c);

} // namespace gpv
