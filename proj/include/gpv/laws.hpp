#pragma once

#include "gpv/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpv {

/// Enough data to replay a check: the graph and the vertex sets involved.
struct law_payload {
  graph g;
  std::vector<std::pair<std::string, vertex_set>> sets;
};

/// Result of checking one statement on one instance. passed == (expected == actual).
struct law_report {
  std::string law;
  std::string instance;
  bool passed = false;
  std::string expected;
  std::string actual;
  /// Set on failure.
  std::optional<law_payload> counterexample;
  /// Sets exhibited by laws whose job is to find an example (non-heredity, converses).
  std::optional<law_payload> evidence;
};

/// Largest order the exhaustive (all-subsets) structural checks accept.
inline constexpr int structural_max_n = 12;
/// Largest order accepted by check_sufficient.
inline constexpr int sufficient_max_n = 18;
/// Largest product order accepted by check_products.
inline constexpr int products_max_n = 36;

/// Subset-exhaustive checks of the set characterizations on one graph:
/// total sets are the subsets of S(G), outer sets (size >= 2) are the MMD cliques,
/// dual sets are the gp sets with convex complement, the adjacent and
/// non-adjacent pair criteria, gp_d = 1 => s = 1, the chain inequalities, and
/// solver/oracle agreement. Throws size_error above structural_max_n.
std::vector<law_report> check_structural(const graph &g, std::string_view instance);

/// Sufficient conditions for gp_d = 0: all edges P4-inner isometric, and the
/// girth >= 6 criterion. Throws size_error above sufficient_max_n.
std::vector<law_report> check_sufficient(const graph &g, std::string_view instance);

/// Cartesian product laws for G and H (both connected, order >= 2).
/// Throws size_error when |V(G)||V(H)| > products_max_n.
std::vector<law_report> check_products(const graph &g, std::string_view g_name, const graph &h,
                                       std::string_view h_name, std::uint64_t seed = 0);

/// Closed-form values for the named families: paths, trees, theta graphs,
/// G_m, G_{k,l}, strong products of complete bipartite graphs, and the C_5
/// non-heredity example.
std::vector<law_report> check_families(std::uint64_t seed = 0);

enum class law_suite { structural, sufficient, products, families, all };

std::string_view suite_name(law_suite s);
/// Throws spec_error on unknown names.
law_suite parse_suite(std::string_view text);

/// Runs a suite over its fixed, seeded instance grid; reports sorted by law id.
std::vector<law_report> run_suite(law_suite s, std::uint64_t seed = 0);

} // namespace gpv
