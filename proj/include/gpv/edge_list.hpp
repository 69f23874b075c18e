#pragma once

#include "gpv/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace gpv {

// Edge-list text format:
//   # optional comment lines
//   n m
//   u v      (m lines, 0 <= u < v < n)
// Writers emit edges in lexicographic order, one per line, '\n' terminated.

/// Throws parse_error with a line number on malformed input.
graph read_edge_list(std::istream &in);
graph parse_edge_list(std::string_view text);
graph load_edge_list(const std::string &path);

void write_edge_list(std::ostream &out, const graph &g, std::string_view comment = {});
std::string format_edge_list(const graph &g, std::string_view comment = {});
void save_edge_list(const std::string &path, const graph &g, std::string_view comment = {});

} // namespace gpv
