#include "gpv/edge_list.hpp"

#include "gpv/errors.hpp"

#include <fstream>
#include <sstream>

namespace gpv {

namespace {

[[noreturn]] void fail(int line, const std::string &what) {
  throw parse_error("line " + std::to_string(line) + ": " + what);
}

bool is_blank(const std::string &s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads exactly two non-negative integers from a data line.
std::pair<long, long> two_ints(const std::string &s, int line) {
  std::istringstream is(s);
  long a = 0, b = 0;
  if (!(is >> a >> b))
    fail(line, "expected two integers, got '" + s + "'");
  std::string extra;
  if (is >> extra)
    fail(line, "unexpected trailing text '" + extra + "'");
  if (a < 0 || b < 0)
    fail(line, "negative value in '" + s + "'");
  return {a, b};
}

} // namespace

graph read_edge_list(std::istream &in) {
  std::string s;
  int line = 0;
  long n = -1, m = -1;
  std::vector<edge> es;
  while (std::getline(in, s)) {
    ++line;
    if (!s.empty() && s.back() == '\r')
      s.pop_back();
    if (s.starts_with('#') || is_blank(s))
      continue;
    auto [a, b] = two_ints(s, line);
    if (n < 0) {
      if (a > 1'000'000)
        fail(line, "vertex count " + std::to_string(a) + " is too large");
      n = a;
      m = b;
      if (m > n * (n - 1) / 2)
        fail(line, "edge count " + std::to_string(m) + " exceeds a simple graph on " +
                       std::to_string(n) + " vertices");
      continue;
    }
    if (static_cast<long>(es.size()) == m)
      fail(line, "more edge lines than the declared " + std::to_string(m));
    if (!(a < b))
      fail(line, "edge endpoints must satisfy u < v, got '" + s + "'");
    if (b >= n)
      fail(line, "vertex " + std::to_string(b) + " out of range for n = " + std::to_string(n));
    es.emplace_back(static_cast<vertex>(a), static_cast<vertex>(b));
  }
  if (n < 0)
    throw parse_error("missing header line 'n m'");
  if (static_cast<long>(es.size()) != m)
    throw parse_error("declared " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
  try {
    return graph::build(static_cast<int>(n), es);
  } catch (const error &e) {
    throw parse_error(e.what());
  }
}

graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_edge_list(is);
}

graph load_edge_list(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const graph &g, std::string_view comment) {
  if (!comment.empty())
    out << "# " << comment << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

std::string format_edge_list(const graph &g, std::string_view comment) {
  std::ostringstream os;
  write_edge_list(os, g, comment);
  return os.str();
}

void save_edge_list(const std::string &path, const graph &g, std::string_view comment) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot write '" + path + "'");
  write_edge_list(out, g, comment);
}

} // namespace gpv
