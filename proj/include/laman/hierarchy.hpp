#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laman/decomposition.hpp"
#include "laman/graph.hpp"
#include "laman/two_forest.hpp"

namespace laman {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct HierarchyNode {
  NodeId id = kNoNode;
  Color color = Color::red;
  /// Root is level 1; nodes for trees formed by step-i deletions sit at level i.
  std::int32_t level = 0;
  NodeId parent = kNoNode;
  /// Ascending node id.
  std::vector<NodeId> children;
  /// Set exactly on leaves.
  VertexId leaf_vertex = kNoVertex;
  friend bool operator==(const HierarchyNode&, const HierarchyNode&) = default;
};

/// Image of a graph edge (u, v): a is an ancestor of alpha(u), b of alpha(v).
struct CrossEdge {
  EdgeId source_edge = kNoEdge;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  friend bool operator==(const CrossEdge&, const CrossEdge&) = default;
};

/// Red-black hierarchy: a leveled two-colored rooted tree plus cross edges,
/// with alpha mapping graph vertices to leaves.
struct Hierarchy {
  std::vector<HierarchyNode> nodes;
  std::vector<CrossEdge> cross_edges;
  std::vector<NodeId> alpha;
  NodeId root = kNoNode;
  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

/// Bottom-up construction from the deletion schedule using one union-find per
/// color. Throws std::domain_error unless the schedule deleted every edge.
Hierarchy reconstruct(const DeletionSchedule& schedule, const Graph& gstar);

enum class Rule {
  structure,
  coloring,
  root_rule,
  leaf_rule,
  cross_edge_rule,
  tree_rule,
  alpha_bijection,
  edge_coverage,
  ancestor_rule,
};

std::string rule_name(Rule r);

struct RuleViolation {
  Rule rule;
  NodeId node = kNoNode;
  std::string detail;
};

struct ValidationResult {
  std::vector<RuleViolation> violations;
  bool valid() const { return violations.empty(); }
  bool has(Rule r) const;
};

/// Checks the hierarchy axioms and the four red-black rules against G (the
/// undoubled graph) in linear time. Violations are returned, never thrown.
ValidationResult validate(const Hierarchy& h, const Graph& g);

/// Graphviz rendering: tree edges solid, cross edges dashed.
std::string to_dot(const Hierarchy& h);

}  // namespace laman
