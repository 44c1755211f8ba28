#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "laman/graph.hpp"

using namespace laman;

TEST_CASE("parse triangle and single edge") {
  Graph t = fixtures::graph(fixtures::kTriangle);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.edge(0) == Edge{0, 1, false});
  CHECK(t.edge(2) == Edge{1, 2, false});
  CHECK(t.degree(0) == 2);

  Graph s = fixtures::graph(fixtures::kSingleEdge);
  CHECK(s.vertex_count() == 2);
  CHECK(s.edge_count() == 1);
}

TEST_CASE("parse errors carry the offending line") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 3\n1 2\n1 3\n3 3\n") == 4);
  CHECK(line_of("3 3\n1 2\n1 3\n1 2\n") == 4);
  CHECK(line_of("3 3\n1 2\n1 4\n2 3\n") == 3);
  CHECK(line_of("3 x\n") == 1);
  CHECK(line_of("3 3\n1 2\n") == 2);
  CHECK(line_of("2 1\n1 2\n1 2\n") == 3);
  CHECK(line_of("") == 1);
}

TEST_CASE("comments and blank lines are skipped") {
  Graph g = parse_graph("# header comment\n\n3 3\n1 2\n# mid\n1 3\n\n2 3\n");
  CHECK(g == fixtures::graph(fixtures::kTriangle));
}

TEST_CASE("serialize round trip") {
  for (auto text : {fixtures::kTriangle, fixtures::kSingleEdge, fixtures::kK4Plus, fixtures::kK33}) {
    Graph g = fixtures::graph(text);
    CHECK(serialize_graph(g) == text);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
  std::istringstream in(std::string(fixtures::kK4));
  CHECK(parse_graph(in).edge_count() == 6);
}

TEST_CASE("count check") {
  CHECK(count_check(fixtures::graph(fixtures::kTriangle)));
  CHECK_FALSE(count_check(fixtures::graph(fixtures::kK4)));
  CHECK_FALSE(count_check(Graph(1, {})));
  CHECK(count_check(fixtures::graph(fixtures::kSingleEdge)));
}

TEST_CASE("doubling an edge") {
  Graph t2 = double_edge(fixtures::graph(fixtures::kTriangle), 0);
  CHECK(t2.edge_count() == 4);
  CHECK(t2.added_copy() == 3);
  CHECK(t2.edge(3).u == 0);
  CHECK(t2.edge(3).v == 1);
  CHECK(t2.edge(3).is_added_copy);
  CHECK(t2.degree(0) == 3);

  Graph s2 = double_edge(fixtures::graph(fixtures::kSingleEdge), 0);
  CHECK(s2.edge_count() == 2);
  CHECK(s2.edge(0).u == s2.edge(1).u);

  Graph k = fixtures::graph(fixtures::kK33);
  for (EdgeId e = 0; e < k.edge_count(); ++e) CHECK(double_edge(k, e).edge_count() == 10);

  CHECK_THROWS_AS(double_edge(k, 9), std::domain_error);
  CHECK_THROWS_AS(double_edge(t2, 0), std::domain_error);
  CHECK(serialize_graph(t2) == fixtures::kTriangle);
}

TEST_CASE("graph constructor rejects bad edges") {
  CHECK_THROWS(Graph(2, {{0, 0, false}}));
  CHECK_THROWS(Graph(2, {{0, 2, false}}));
  // Parallel edges are legal at this level; G* needs them.
  CHECK(Graph(2, {{0, 1, false}, {1, 0, false}}).edge_count() == 2);
}
