#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laman/decomposition.hpp"
#include "laman/graph.hpp"
#include "laman/hierarchy.hpp"
#include "laman/two_forest.hpp"

namespace laman::testing {

// Hierarchy read straight off the component definitions: a level-j node is a
// component of the step-j color after every deletion up to step j.
struct TopDownNode {
  std::int32_t level = 0;
  Color color = Color::red;
  std::vector<VertexId> vertices;  // sorted
  std::int32_t parent = -1;
};

struct TopDownCross {
  EdgeId edge = kNoEdge;
  std::int32_t a = -1;  // node holding edge.u
  std::int32_t b = -1;
};

struct TopDownHierarchy {
  std::vector<TopDownNode> nodes;
  std::vector<TopDownCross> cross;
};

TopDownHierarchy top_down(const DeletionSchedule& schedule, const Graph& gstar, const TwoForest& forest);

// Empty when h and t agree node for node on (level, vertex set), color,
// parent and cross edges; otherwise a description of the first difference.
std::string isomorphism_mismatch(const Hierarchy& h, const TopDownHierarchy& t);

// Exhaustive search over edge subsets for a split of G* into two spanning
// trees. Only for tiny graphs.
std::optional<std::vector<Color>> enumerate_two_tree_partition(const Graph& gstar);

bool is_two_tree_partition(const Graph& gstar, const std::vector<Color>& colors);

// Calls fn for every labeled graph on n vertices with m edges, in
// lexicographic order of edge sets; optionally only connected ones.
void for_each_graph(VertexId n, EdgeId m, bool connected_only, const std::function<void(const Graph&)>& fn);

// Re-derives each reported crossing set by flood fill over the surviving
// edges and compares it with what decompose reported.
class CutSoundness {
 public:
  CutSoundness(const Graph& gstar, const TwoForest& forest);
  DecompositionObserver observer();
  std::size_t checked() const { return checked_; }
  std::size_t mismatches() const { return mismatches_; }
  const std::string& first_mismatch() const { return first_; }

 private:
  void on_deletion(std::int32_t step, const OrientedEdge& e, std::span<const EdgeId> crossing);

  const Graph& gstar_;
  const TwoForest& forest_;
  std::vector<std::uint8_t> deleted_;
  std::vector<std::uint8_t> reported_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t epoch_ = 0;
  std::size_t checked_ = 0;
  std::size_t mismatches_ = 0;
  std::string first_;
};

}  // namespace laman::testing
