#include <sstream>

#include "doctest.h"
#include "../support/oracle_support.hpp"
#include "fixtures.hpp"
#include "laman/corpus.hpp"
#include "laman/decomposition.hpp"
#include "laman/oracles.hpp"

using namespace laman;

namespace {

TwoForest triangle_forest(const Graph& gstar) {
  return TwoForest::from_coloring(gstar, {Color::red, Color::red, Color::black, Color::black});
}

}  // namespace

TEST_CASE("single edge") {
  Graph g = double_edge(fixtures::graph(fixtures::kSingleEdge), 0);
  auto forest = extract_two_trees(g);
  REQUIRE(forest);
  DeletionSchedule s = decompose(g, *forest);
  REQUIRE(s.groups.size() == 2);
  CHECK(s.groups[0] == DeletionGroup{2, Color::black, {{1, 0, 1}}});
  CHECK(s.groups[1] == DeletionGroup{3, Color::red, {{0, 0, 1}}});
  CHECK(s.leftover_edges.empty());
  CHECK(s.deleted_count == 2);
  CHECK(verdict(s) == Verdict::laman);
  CHECK(decompose_naive(g, *forest) == s);
}

TEST_CASE("triangle with a fixed split") {
  Graph g = double_edge(fixtures::graph(fixtures::kTriangle), 0);
  TwoForest forest = triangle_forest(g);
  DeletionSchedule s = decompose(g, forest);
  REQUIRE(s.groups.size() == 3);
  CHECK(s.groups[0] == DeletionGroup{2, Color::black, {{3, 0, 1}}});
  CHECK(s.groups[1] == DeletionGroup{3, Color::red, {{0, 0, 1}, {1, 0, 2}}});
  CHECK(s.groups[2] == DeletionGroup{4, Color::black, {{2, 1, 2}}});
  CHECK(s.leftover_edges.empty());
  CHECK(verdict(s) == Verdict::laman);
  CHECK(decompose_naive(g, forest) == s);

  std::ostringstream trace;
  write_trace(trace, s);
  CHECK(trace.str() == "step=2 color=B deleted=1-2\nstep=3 color=R deleted=1-2,1-3\nstep=4 color=B deleted=2-3\n");
}

TEST_CASE("K4 plus a path is rejected") {
  Graph g = fixtures::graph(fixtures::kK4Plus);
  CHECK(bruteforce_verify(g) == Verdict::not_laman);
  Graph gstar = double_edge(g, 0);
  auto forest = extract_two_trees(gstar);
  if (forest) {
    DeletionSchedule s = decompose(gstar, *forest);
    CHECK_FALSE(s.leftover_edges.empty());
    CHECK(verdict(s) == Verdict::not_laman);
    CHECK(s.deleted_count + static_cast<std::int64_t>(s.leftover_edges.size()) == gstar.edge_count());
    CHECK(decompose_naive(gstar, *forest) == s);
  }
}

TEST_CASE("every split of small non-Laman graphs: fast equals naive, never stalls") {
  // The surviving tree spans G*, so it always crosses the cut the copy leaves:
  // step 3 is never empty and rejection shows up as leftover edges.
  int splits = 0;
  for (VertexId n = 4; n <= 6; ++n) {
    int graphs = 0;
    testing::for_each_graph(n, 2 * n - 3, true, [&](const Graph& g) {
      if (graphs >= 40 || bruteforce_verify(g) == Verdict::laman) return;
      Graph gstar = double_edge(g, 0);
      if (!extract_two_trees(gstar)) return;
      ++graphs;
      const EdgeId m = gstar.edge_count();
      std::vector<Color> colors(static_cast<std::size_t>(m));
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        for (EdgeId e = 0; e < m; ++e) colors[e] = (mask >> e) & 1u ? Color::black : Color::red;
        if (colors[gstar.added_copy()] != Color::black || !testing::is_two_tree_partition(gstar, colors)) continue;
        TwoForest forest = TwoForest::from_coloring(gstar, colors);
        DeletionSchedule fast = decompose(gstar, forest);
        REQUIRE(fast == decompose_naive(gstar, forest));
        CHECK(verdict(fast) == Verdict::not_laman);
        CHECK(fast.groups.size() >= 2);
        ++splits;
      }
    });
  }
  MESSAGE(splits << " splits checked");
  CHECK(splits > 0);
}

TEST_CASE("groups alternate colors and partition the deleted edges") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph gstar = double_edge(generate_laman({40, seed, 0.5}), 0);
    auto forest = extract_two_trees(gstar);
    REQUIRE(forest);
    DeletionSchedule s = decompose(gstar, *forest);
    CHECK(s.groups.front().step == 2);
    CHECK(s.groups.front().edges.size() == 1);
    std::vector<int> seen(static_cast<std::size_t>(gstar.edge_count()), 0);
    for (std::size_t i = 0; i < s.groups.size(); ++i) {
      const DeletionGroup& g = s.groups[i];
      CHECK(g.step == static_cast<std::int32_t>(i) + 2);
      CHECK_FALSE(g.edges.empty());
      if (i) CHECK(g.color == opposite(s.groups[i - 1].color));
      for (std::size_t k = 0; k < g.edges.size(); ++k) {
        CHECK(forest->color_of(g.edges[k].id) == g.color);
        if (k) CHECK(g.edges[k - 1].id < g.edges[k].id);
        ++seen[g.edges[k].id];
      }
    }
    for (int c : seen) CHECK(c == 1);
    CHECK(s.deleted_count == 2 * 40 - 2);
    CHECK(decompose_naive(gstar, *forest) == s);
  }
}

TEST_CASE("observer sees every deletion and every step") {
  Graph gstar = double_edge(generate_laman({30, 5, 0.5}), 0);
  auto forest = extract_two_trees(gstar);
  REQUIRE(forest);
  std::int64_t deletions = 0;
  std::size_t steps = 0;
  DecompositionObserver obs;
  obs.on_deletion = [&](std::int32_t, const OrientedEdge&, std::span<const EdgeId>) { ++deletions; };
  obs.on_step = [&](const DeletionGroup&) { ++steps; };
  DeletionSchedule s = decompose(gstar, *forest, &obs);
  CHECK(deletions == s.deleted_count);
  CHECK(steps == s.groups.size());

  testing::CutSoundness cut(gstar, *forest);
  DecompositionObserver checker = cut.observer();
  decompose(gstar, *forest, &checker);
  CHECK(cut.checked() == static_cast<std::size_t>(s.deleted_count));
  CHECK(cut.mismatches() == 0);
}

TEST_CASE("decompose requires a doubled graph") {
  Graph g = fixtures::graph(fixtures::kTriangle);
  Graph gstar = double_edge(g, 0);
  TwoForest forest = triangle_forest(gstar);
  CHECK_THROWS_AS(decompose(g, forest), std::domain_error);
}
