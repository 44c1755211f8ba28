#include "laman/hierarchy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "laman/union_find.hpp"

namespace laman {

namespace {

class Builder {
 public:
  Builder(const Graph& gstar, Color root_color) : n_(gstar.vertex_count()), uf_{UnionFind(n_), UnionFind(n_)} {
    for (auto& r : registry_) r.assign(static_cast<std::size_t>(n_), {});
    nodes_.reserve(4 * static_cast<std::size_t>(n_));
    root_ = add_node(1, root_color, kNoVertex);
  }

  NodeId root() const { return root_; }

  // The level-i node for the color-c tree holding x; an orphan gets the
  // opposite-color node one level up as parent.
  NodeId node_for(std::int32_t level, Color c, VertexId x) {
    NodeId id = lookup_or_add(level, c, x);
    if (nodes_[id].parent == kNoNode) {
      NodeId parent = level - 1 == 1 ? root_ : lookup_or_add(level - 1, opposite(c), x);
      nodes_[id].parent = parent;
    }
    return id;
  }

  void merge_group(const DeletionGroup& group, const std::vector<NodeId>& endpoints) {
    const Color c = group.color;
    const std::int32_t gp_level = group.step - 2;
    for (const OrientedEdge& e : group.edges) uf(c).unite(e.parent, e.child);
    for (std::size_t k = 0; k < group.edges.size(); ++k) {
      NodeId grandparent = gp_level == 1 ? root_ : lookup_or_add(gp_level, c, group.edges[k].parent);
      for (NodeId member : {endpoints[2 * k], endpoints[2 * k + 1]}) {
        NodeId p = nodes_[member].parent;
        if (p == kNoNode) throw std::logic_error("reconstruct: level-" + std::to_string(group.step) + " node without parent");
        NodeId& slot = nodes_[p].parent;
        if (slot == kNoNode) {
          slot = grandparent;
        } else if (slot != grandparent) {
          throw std::domain_error("reconstruct: cross edges of step " + std::to_string(group.step) +
                                  " disagree on a grandparent");
        }
      }
    }
  }

  Hierarchy finish(std::vector<CrossEdge> cross) {
    Hierarchy h;
    h.root = root_;
    h.cross_edges = std::move(cross);
    std::vector<std::int32_t> child_count(nodes_.size(), 0);
    for (NodeId id = 0; id < static_cast<NodeId>(nodes_.size()); ++id) {
      NodeId p = nodes_[id].parent;
      if (id != root_ && p == kNoNode) throw std::domain_error("reconstruct: node " + std::to_string(id) + " never adopted");
      if (p != kNoNode) ++child_count[p];
    }
    for (std::size_t id = 0; id < nodes_.size(); ++id) nodes_[id].children.reserve(static_cast<std::size_t>(child_count[id]));
    for (NodeId id = 0; id < static_cast<NodeId>(nodes_.size()); ++id) {
      if (nodes_[id].parent != kNoNode) nodes_[nodes_[id].parent].children.push_back(id);
    }
    h.alpha.assign(static_cast<std::size_t>(n_), kNoNode);
    for (HierarchyNode& node : nodes_) {
      if (!node.children.empty()) {
        node.leaf_vertex = kNoVertex;
        continue;
      }
      if (node.leaf_vertex == kNoVertex || h.alpha[node.leaf_vertex] != kNoNode) {
        throw std::domain_error("reconstruct: leaf " + std::to_string(node.id) + " does not correspond to a single vertex");
      }
      h.alpha[node.leaf_vertex] = node.id;
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (h.alpha[v] == kNoNode) throw std::domain_error("reconstruct: vertex " + std::to_string(v + 1) + " has no leaf");
    }
    h.nodes = std::move(nodes_);
    return h;
  }

 private:
  struct Slot {
    std::int32_t level = 0;
    NodeId node = kNoNode;
  };

  UnionFind& uf(Color c) { return uf_[index_of(c)]; }

  VertexId singleton(Color c, VertexId x) { return uf(c).size_of(x) == 1 ? x : kNoVertex; }

  NodeId add_node(std::int32_t level, Color c, VertexId vertex) {
    auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({id, c, level, kNoNode, {}, vertex});
    return id;
  }

  // All lookups of one level run against the same union-find state (the
  // color's next unions happen only after the level is finished), so a slot
  // per representative tagged with its level stands in for a (level, rep) map.
  NodeId lookup_or_add(std::int32_t level, Color c, VertexId x) {
    Slot& slot = registry_[index_of(c)][uf(c).find(x)];
    if (slot.level != level) slot = {level, add_node(level, c, singleton(c, x))};
    return slot.node;
  }

  VertexId n_;
  std::array<UnionFind, 2> uf_;
  std::vector<HierarchyNode> nodes_;
  std::array<std::vector<Slot>, 2> registry_;
  NodeId root_ = kNoNode;
};

}  // namespace

Hierarchy reconstruct(const DeletionSchedule& schedule, const Graph& gstar) {
  if (verdict(schedule) != Verdict::laman || schedule.deleted_count != gstar.edge_count()) {
    throw std::domain_error("reconstruct: schedule leaves edges undeleted");
  }
  if (schedule.groups.empty() || schedule.groups.front().step != 2 || schedule.groups.front().edges.size() != 1 ||
      schedule.groups.front().edges.front().id != gstar.added_copy()) {
    throw std::domain_error("reconstruct: schedule must open with the added copy at step 2");
  }
  if (schedule.groups.size() < 2) throw std::domain_error("reconstruct: schedule has no cross-edge groups");

  Builder b(gstar, opposite(schedule.groups.front().color));
  // Every edge other than the added copy is deleted exactly once after step
  // 2, so its cross edge can go straight to its slot.
  std::vector<CrossEdge> cross(static_cast<std::size_t>(gstar.edge_count() - 1));
  std::vector<NodeId> endpoints;
  for (auto it = schedule.groups.rbegin(); it != schedule.groups.rend() && it->step >= 3; ++it) {
    const DeletionGroup& group = *it;
    endpoints.clear();
    for (const OrientedEdge& e : group.edges) {
      if (e.id < 0 || e.id >= static_cast<EdgeId>(cross.size())) {
        throw std::domain_error("reconstruct: step " + std::to_string(group.step) + " deletes unknown edge " + std::to_string(e.id));
      }
      NodeId a = b.node_for(group.step, group.color, e.parent);
      NodeId c = b.node_for(group.step, group.color, e.child);
      endpoints.push_back(a);
      endpoints.push_back(c);
      cross[static_cast<std::size_t>(e.id)] = {e.id, e.parent, e.child, a, c};
    }
    b.merge_group(group, endpoints);
  }
  return b.finish(std::move(cross));
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::structure: return "structure";
    case Rule::coloring: return "coloring";
    case Rule::root_rule: return "root rule";
    case Rule::leaf_rule: return "leaf rule";
    case Rule::cross_edge_rule: return "cross-edge rule";
    case Rule::tree_rule: return "tree rule";
    case Rule::alpha_bijection: return "alpha bijection";
    case Rule::edge_coverage: return "edge coverage";
    case Rule::ancestor_rule: return "ancestor rule";
  }
  return "unknown";
}

bool ValidationResult::has(Rule r) const {
  return std::any_of(violations.begin(), violations.end(), [r](const RuleViolation& v) { return v.rule == r; });
}

ValidationResult validate(const Hierarchy& h, const Graph& g) {
  ValidationResult res;
  auto fail = [&](Rule r, NodeId node, std::string detail) { res.violations.push_back({r, node, std::move(detail)}); };
  const auto count = static_cast<NodeId>(h.nodes.size());
  auto in_range = [&](NodeId x) { return x >= 0 && x < count; };

  // Tree structure first; the rule checks below rely on it.
  if (!in_range(h.root)) {
    fail(Rule::structure, kNoNode, "root id out of range");
    return res;
  }
  for (NodeId id = 0; id < count; ++id) {
    const HierarchyNode& node = h.nodes[id];
    if (node.id != id) fail(Rule::structure, id, "node id does not match its position");
    if (id == h.root) {
      if (node.parent != kNoNode) fail(Rule::structure, id, "root has a parent");
      if (node.level != 1) fail(Rule::structure, id, "root is not at level 1");
      continue;
    }
    if (!in_range(node.parent)) {
      fail(Rule::structure, id, "non-root node without a valid parent");
      continue;
    }
    if (h.nodes[node.parent].level + 1 != node.level) fail(Rule::structure, id, "level is not parent level + 1");
  }
  std::vector<std::int32_t> listed(static_cast<std::size_t>(count), 0);
  for (NodeId id = 0; id < count; ++id) {
    for (NodeId c : h.nodes[id].children) {
      if (!in_range(c) || h.nodes[c].parent != id) {
        fail(Rule::structure, id, "child list disagrees with parent pointers");
      } else {
        ++listed[c];
      }
    }
  }
  for (NodeId id = 0; id < count; ++id) {
    if (id != h.root && listed[id] != 1) fail(Rule::structure, id, "node is not listed exactly once by its parent");
  }
  if (!res.valid()) return res;

  for (NodeId id = 0; id < count; ++id) {
    const HierarchyNode& node = h.nodes[id];
    if (id != h.root && node.color == h.nodes[node.parent].color) fail(Rule::coloring, id, "same color as its parent");
    const Color expected = node.level % 2 == 1 ? h.nodes[h.root].color : opposite(h.nodes[h.root].color);
    if (node.color != expected) fail(Rule::coloring, id, "color does not match level parity");
  }

  if (h.nodes[h.root].children.size() != 2) {
    fail(Rule::root_rule, h.root, "root has " + std::to_string(h.nodes[h.root].children.size()) + " children");
  }
  for (NodeId id = 0; id < count; ++id) {
    if (id == h.root) continue;
    const HierarchyNode& node = h.nodes[id];
    const bool only_child = h.nodes[node.parent].children.size() == 1;
    const bool leaf = node.children.empty();
    if (only_child != leaf) {
      fail(Rule::leaf_rule, id, only_child ? "only child that is not a leaf" : "leaf with siblings");
    }
  }

  // alpha: a bijection from V onto the leaves.
  const VertexId n = g.vertex_count();
  std::vector<VertexId> vertex_of_leaf(static_cast<std::size_t>(count), kNoVertex);
  if (static_cast<VertexId>(h.alpha.size()) != n) {
    fail(Rule::alpha_bijection, kNoNode, "alpha has " + std::to_string(h.alpha.size()) + " entries for " + std::to_string(n) + " vertices");
  } else {
    for (VertexId v = 0; v < n; ++v) {
      NodeId leaf = h.alpha[v];
      if (!in_range(leaf) || !h.nodes[leaf].children.empty()) {
        fail(Rule::alpha_bijection, leaf, "alpha(" + std::to_string(v + 1) + ") is not a leaf");
      } else if (vertex_of_leaf[leaf] != kNoVertex) {
        fail(Rule::alpha_bijection, leaf, "leaf is the image of two vertices");
      } else {
        vertex_of_leaf[leaf] = v;
      }
    }
  }
  for (NodeId id = 0; id < count; ++id) {
    if (h.nodes[id].children.empty() && vertex_of_leaf[id] == kNoVertex) fail(Rule::alpha_bijection, id, "leaf without a vertex");
  }

  // Edge coverage: exactly one cross edge per edge of G.
  std::int64_t m = 0;
  for (const Edge& e : g.edges()) m += e.is_added_copy ? 0 : 1;
  if (static_cast<std::int64_t>(h.cross_edges.size()) != m) {
    fail(Rule::edge_coverage, kNoNode, std::to_string(h.cross_edges.size()) + " cross edges for " + std::to_string(m) + " graph edges");
  }
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(g.edge_count()), 0);
  for (const CrossEdge& x : h.cross_edges) {
    if (x.source_edge < 0 || x.source_edge >= g.edge_count() || g.edge(x.source_edge).is_added_copy) {
      fail(Rule::edge_coverage, kNoNode, "cross edge for unknown edge " + std::to_string(x.source_edge));
      continue;
    }
    const Edge& e = g.edge(x.source_edge);
    if (!((e.u == x.u && e.v == x.v) || (e.u == x.v && e.v == x.u))) {
      fail(Rule::edge_coverage, kNoNode, "cross edge endpoints do not match edge " + std::to_string(x.source_edge));
    }
    if (covered[x.source_edge]++) fail(Rule::edge_coverage, kNoNode, "edge " + std::to_string(x.source_edge) + " has two cross edges");
  }

  // Cross-edge rule, then tree rule via one union-find over nodes.
  std::vector<std::int32_t> edges_at(static_cast<std::size_t>(count), 0);
  UnionFind joined(count);
  auto grandparent = [&](NodeId x) {
    NodeId p = h.nodes[x].parent;
    return p == kNoNode ? kNoNode : h.nodes[p].parent;
  };
  for (const CrossEdge& x : h.cross_edges) {
    if (!in_range(x.a) || !in_range(x.b)) {
      fail(Rule::cross_edge_rule, kNoNode, "cross edge endpoint out of range");
      continue;
    }
    NodeId ga = grandparent(x.a);
    if (ga == kNoNode || ga != grandparent(x.b) || h.nodes[x.a].parent == h.nodes[x.b].parent) {
      fail(Rule::cross_edge_rule, x.a, "cross edge " + std::to_string(x.a) + "-" + std::to_string(x.b) +
                                           " needs a shared grandparent and distinct parents");
      continue;
    }
    ++edges_at[ga];
    if (!joined.unite(x.a, x.b)) fail(Rule::tree_rule, ga, "cross edges under this node contain a cycle");
  }
  for (NodeId id = 0; id < count; ++id) {
    std::int32_t grandchildren = 0;
    NodeId anchor = kNoNode;
    bool connected = true;
    for (NodeId c : h.nodes[id].children) {
      for (NodeId gc : h.nodes[c].children) {
        ++grandchildren;
        if (anchor == kNoNode) anchor = gc;
        else if (!joined.same(anchor, gc)) connected = false;
      }
    }
    if (grandchildren == 0 && edges_at[id] == 0) continue;
    if (!connected || edges_at[id] != grandchildren - 1) {
      fail(Rule::tree_rule, id, std::to_string(edges_at[id]) + " cross edges do not span " + std::to_string(grandchildren) +
                                    " grandchildren as a tree");
    }
  }

  // Ancestor rule through Euler-tour intervals.
  std::vector<std::int32_t> tin(static_cast<std::size_t>(count), 0);
  std::vector<std::int32_t> tout(static_cast<std::size_t>(count), 0);
  {
    std::int32_t clock = 0;
    std::vector<std::pair<NodeId, std::size_t>> stack{{h.root, 0}};
    tin[h.root] = clock++;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == h.nodes[v].children.size()) {
        tout[v] = clock++;
        stack.pop_back();
        continue;
      }
      NodeId c = h.nodes[v].children[i++];
      tin[c] = clock++;
      stack.push_back({c, 0});
    }
  }
  auto ancestor = [&](NodeId a, NodeId d) { return tin[a] <= tin[d] && tout[d] <= tout[a]; };
  if (static_cast<VertexId>(h.alpha.size()) == n) {
    for (const CrossEdge& x : h.cross_edges) {
      if (!in_range(x.a) || !in_range(x.b) || x.u < 0 || x.u >= n || x.v < 0 || x.v >= n) continue;
      NodeId lu = h.alpha[x.u];
      NodeId lv = h.alpha[x.v];
      if (!in_range(lu) || !in_range(lv)) continue;
      if (!ancestor(x.a, lu) || !ancestor(x.b, lv) || ancestor(x.a, lv) || ancestor(x.b, lu)) {
        fail(Rule::ancestor_rule, x.a, "cross edge for " + std::to_string(x.u + 1) + "-" + std::to_string(x.v + 1) +
                                           " is not an ancestor pair that excludes common ancestors");
      }
    }
  }
  return res;
}

std::string to_dot(const Hierarchy& h) {
  std::ostringstream out;
  out << "graph rbh {\n  node [style=filled, fontcolor=white];\n";
  for (const HierarchyNode& node : h.nodes) {
    out << "  n" << node.id << " [label=\"" << node.id;
    if (node.leaf_vertex != kNoVertex) out << ":v" << node.leaf_vertex + 1;
    out << "\", fillcolor=" << (node.color == Color::red ? "red" : "black") << "];\n";
  }
  for (const HierarchyNode& node : h.nodes) {
    if (node.parent != kNoNode) out << "  n" << node.parent << " -- n" << node.id << ";\n";
  }
  for (const CrossEdge& x : h.cross_edges) {
    out << "  n" << x.a << " -- n" << x.b << " [style=dashed, constraint=false, label=\"" << x.u + 1 << "-" << x.v + 1
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace laman
