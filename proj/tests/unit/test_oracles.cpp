#include "doctest.h"
#include "fixtures.hpp"
#include "laman/corpus.hpp"
#include "laman/oracles.hpp"
#include "laman/pipeline.hpp"

using namespace laman;

TEST_CASE("pebble game and brute force on fixed graphs") {
  for (auto text : {fixtures::kTriangle, fixtures::kSingleEdge, fixtures::kK33, fixtures::kFan}) {
    Graph g = fixtures::graph(text);
    CHECK(pebble_verify(g, true) == Verdict::laman);
    CHECK(bruteforce_verify(g) == Verdict::laman);
    CHECK(run_pipeline(g).verdict == Verdict::laman);
  }
  for (auto text : {fixtures::kK4Plus, fixtures::kK4}) {
    Graph g = fixtures::graph(text);
    CHECK(pebble_verify(g, true) == Verdict::not_laman);
    CHECK(bruteforce_verify(g) == Verdict::not_laman);
    CHECK(run_pipeline(g).verdict == Verdict::not_laman);
  }
}

TEST_CASE("over-braced subsets are found") {
  // Two triangles glued along an edge plus a K4: m = 2n - 3 with K4 over-braced.
  Graph g = parse_graph("7 11\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n5 6\n6 7\n7 5\n6 1\n");
  CHECK(bruteforce_verify(g) == Verdict::not_laman);
  CHECK(pebble_verify(g) == Verdict::not_laman);
}

TEST_CASE("brute force refuses large graphs") {
  CHECK_THROWS_AS(bruteforce_verify(generate_laman({21, 0, 0.5})), std::invalid_argument);
  CHECK_NOTHROW(bruteforce_verify(generate_laman({20, 0, 0.5})));
}

TEST_CASE("pebble invariant holds along generated graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(pebble_verify(generate_laman({80, seed, 0.5}), true) == Verdict::laman);
  }
}
