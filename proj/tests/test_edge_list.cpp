#include "gpv/edge_list.hpp"
#include "gpv/errors.hpp"
#include "gpv/generators.hpp"

#include <doctest.h>

#include <sstream>

using namespace gpv;

TEST_CASE("format") {
  CHECK(format_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK(format_edge_list(path_graph(1), "single") == "# single\n1 0\n");
}

TEST_CASE("parse with comments, blank lines and CRLF") {
  graph g = parse_edge_list("# c4\n\n4 4\r\n0 1\n1 2\n# mid\n2 3\n0 3\n");
  CHECK(g == cycle_graph(4));
}

TEST_CASE("round trip") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    graph g = random_connected(1 + static_cast<int>(s % 15), 0.3, s);
    CHECK(parse_edge_list(format_edge_list(g, "x")) == g);
  }
  graph p = petersen_graph();
  std::stringstream ss;
  write_edge_list(ss, p);
  CHECK(read_edge_list(ss) == p);
}

TEST_CASE("parse errors") {
  for (const char *bad : {"", "# only comment\n", "3\n", "3 1\n0 1 2\n", "3 1\n0 x\n", "3 4\n",
                          "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "3 2\n0 1\n0 1\n",
                          "-1 0\n", "3 1\n0 0\n"})
    CHECK_THROWS_AS(parse_edge_list(bad), parse_error);
  try {
    parse_edge_list("3 1\n0 5\n");
    FAIL("expected parse_error");
  } catch (const parse_error &e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt"), parse_error);
}
