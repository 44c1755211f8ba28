#include <algorithm>

#include "doctest.h"
#include "../support/oracle_support.hpp"
#include "fixtures.hpp"
#include "laman/corpus.hpp"
#include "laman/two_forest.hpp"

using namespace laman;

namespace {

std::vector<Color> colors_of(std::initializer_list<char> letters) {
  std::vector<Color> out;
  for (char c : letters) out.push_back(c == 'R' ? Color::red : Color::black);
  return out;
}

}  // namespace

TEST_CASE("doubled single edge splits into original and copy") {
  Graph g = double_edge(fixtures::graph(fixtures::kSingleEdge), 0);
  auto forest = extract_two_trees(g);
  REQUIRE(forest);
  CHECK(forest->color_of(0) == Color::red);
  CHECK(forest->color_of(1) == Color::black);
}

TEST_CASE("doubled triangle yields a valid two-tree split with the copy black") {
  Graph g = double_edge(fixtures::graph(fixtures::kTriangle), 0);
  auto forest = extract_two_trees(g);
  REQUIRE(forest);
  std::vector<Color> colors(forest->colors().begin(), forest->colors().end());
  CHECK(testing::is_two_tree_partition(g, colors));
  CHECK(forest->color_of(g.added_copy()) == Color::black);
  CHECK(forest->color_of(0) == Color::red);
  // The enumerator agrees that such a split exists, and the fixture split is one.
  CHECK(testing::enumerate_two_tree_partition(g).has_value());
  CHECK(testing::is_two_tree_partition(g, colors_of({'R', 'R', 'B', 'B'})));
}

TEST_CASE("extraction fails exactly when no split exists") {
  int checked = 0;
  for (VertexId n = 2; n <= 5; ++n) {
    testing::for_each_graph(n, 2 * n - 3, false, [&](const Graph& g) {
      Graph gstar = double_edge(g, 0);
      bool exists = testing::enumerate_two_tree_partition(gstar).has_value();
      auto forest = extract_two_trees(gstar);
      CHECK(forest.has_value() == exists);
      if (forest) {
        std::vector<Color> colors(forest->colors().begin(), forest->colors().end());
        CHECK(testing::is_two_tree_partition(gstar, colors));
      }
      ++checked;
    });
  }
  CHECK(checked == 1 + 1 + 6 + 120);
}

TEST_CASE("doubled K4 fails the edge count pre-check") {
  CHECK_FALSE(extract_two_trees(double_edge(fixtures::graph(fixtures::kK4), 0)).has_value());
}

TEST_CASE("dfs numbering") {
  Graph single = double_edge(fixtures::graph(fixtures::kSingleEdge), 0);
  auto f = TwoForest::from_coloring(single, colors_of({'R', 'B'}));
  CHECK(f.discovery(Color::red, 0) == 1);
  CHECK(f.discovery(Color::red, 1) == 2);
  CHECK(f.root(Color::red) == 0);

  // Path 1-2-3 as one color class.
  Graph path = double_edge(parse_graph("3 3\n1 2\n2 3\n1 3\n"), 0);
  std::vector<Color> pc = colors_of({'R', 'R', 'B', 'B'});
  DfsNumbering d = dfs_number(path, pc, Color::red, 0);
  CHECK(d.discovery == std::vector<std::int32_t>{1, 2, 3});
  CHECK(d.finish[2] <= d.finish[1]);
  CHECK(d.finish[1] <= d.finish[0]);
  CHECK(d.finish[0] == 3);
  CHECK(d.parent == std::vector<VertexId>{kNoVertex, 0, 1});

  // Star centered at 1; leaves are discovered in label order.
  Graph star = parse_graph("5 4\n1 5\n1 3\n1 2\n1 4\n");
  std::vector<Color> sc(4, Color::red);
  DfsNumbering s = dfs_number(star, sc, Color::red, 0);
  CHECK(s.discovery == std::vector<std::int32_t>{1, 2, 3, 4, 5});
  CHECK(s.finish == std::vector<std::int32_t>{5, 2, 3, 4, 5});

  CHECK_THROWS(dfs_number(parse_graph("3 3\n1 2\n2 3\n1 3\n"), std::vector<Color>(3, Color::red), Color::red, 0));
  CHECK_THROWS(dfs_number(parse_graph("3 1\n1 2\n"), std::vector<Color>(1, Color::red), Color::red, 0));
}

TEST_CASE("dfs intervals nest on generated graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = double_edge(generate_laman({60, seed, 0.5}), 0);
    auto f = extract_two_trees(g);
    REQUIRE(f);
    for (Color c : {Color::red, Color::black}) {
      const DfsNumbering& t = f->tree(c);
      std::vector<std::int32_t> seen(t.discovery);
      std::sort(seen.begin(), seen.end());
      for (std::int32_t i = 0; i < 60; ++i) CHECK(seen[i] == i + 1);
      for (VertexId v = 0; v < 60; ++v) {
        if (t.parent[v] == kNoVertex) continue;
        VertexId p = t.parent[v];
        CHECK(t.discovery[p] < t.discovery[v]);
        CHECK(t.finish[v] <= t.finish[p]);
        CHECK(t.discovery[v] <= t.finish[v]);
      }
    }
  }
}

TEST_CASE("parent_of orients by the color's tree") {
  Graph tri = double_edge(fixtures::graph(fixtures::kTriangle), 0);
  auto f = TwoForest::from_coloring(tri, colors_of({'R', 'R', 'B', 'B'}));
  CHECK(f.parent_of(Color::red, 1) == OrientedEdge{1, 0, 2});
  CHECK(f.parent_of(Color::black, 2) == OrientedEdge{2, 1, 2});
  CHECK_THROWS_AS(f.parent_of(Color::black, 1), std::domain_error);

  Graph chain = double_edge(parse_graph("3 3\n1 2\n2 3\n1 3\n"), 0);
  auto fc = TwoForest::from_coloring(chain, colors_of({'R', 'R', 'B', 'B'}));
  CHECK(fc.parent_of(Color::red, 1) == OrientedEdge{1, 1, 2});
}

TEST_CASE("from_coloring rejects classes that are not spanning trees") {
  Graph tri = double_edge(fixtures::graph(fixtures::kTriangle), 0);
  CHECK_THROWS(TwoForest::from_coloring(tri, colors_of({'R', 'R', 'R', 'B'})));
  CHECK_THROWS(TwoForest::from_coloring(tri, colors_of({'R', 'B', 'B', 'R'})));
}
