#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "laman/graph.hpp"

namespace laman {

enum class Color : std::uint8_t { red = 0, black = 1 };

constexpr Color opposite(Color c) { return c == Color::red ? Color::black : Color::red; }
constexpr std::size_t index_of(Color c) { return static_cast<std::size_t>(c); }
constexpr char color_letter(Color c) { return c == Color::red ? 'R' : 'B'; }

/// One depth-first traversal of a single-color spanning tree.
///
/// discovery[v] is the 1-based preorder index of v; finish[v] is the largest
/// discovery index in the subtree of v, so the subtree of v is exactly the set
/// of vertices whose discovery index lies in [discovery[v], finish[v]].
struct DfsNumbering {
  VertexId root = kNoVertex;
  std::vector<EdgeId> parent_edge;
  std::vector<VertexId> parent;
  std::vector<std::int32_t> discovery;
  std::vector<std::int32_t> finish;
  /// order[i] is the vertex discovered at index i + 1.
  std::vector<VertexId> order;
};

/// DFS of the color-c edges from root, visiting neighbours in ascending
/// VertexId order. Throws std::invalid_argument if the color class does not
/// reach every vertex.
DfsNumbering dfs_number(const Graph& gstar, std::span<const Color> colors, Color c, VertexId root);

struct OrientedEdge {
  EdgeId id = kNoEdge;
  VertexId parent = kNoVertex;
  VertexId child = kNoVertex;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

/// Partition of G*'s edges into a red and a black spanning tree, with both
/// DFS numberings. Both trees are rooted at vertex 0.
class TwoForest {
 public:
  /// Validates that colors splits gstar into two spanning trees (throws
  /// std::invalid_argument otherwise) and numbers both trees.
  static TwoForest from_coloring(const Graph& gstar, std::vector<Color> colors);

  Color color_of(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  std::span<const Color> colors() const { return colors_; }
  VertexId root(Color c) const { return trees_[index_of(c)].root; }
  const DfsNumbering& tree(Color c) const { return trees_[index_of(c)]; }
  std::int32_t discovery(Color c, VertexId v) const { return trees_[index_of(c)].discovery[static_cast<std::size_t>(v)]; }
  std::int32_t finish(Color c, VertexId v) const { return trees_[index_of(c)].finish[static_cast<std::size_t>(v)]; }
  EdgeId parent_edge(Color c, VertexId v) const { return trees_[index_of(c)].parent_edge[static_cast<std::size_t>(v)]; }
  VertexId vertex_count() const { return static_cast<VertexId>(trees_[0].discovery.size()); }

  /// Endpoints of e ordered (DFS parent, DFS child) in the tree of color c.
  /// Throws std::domain_error when e is not of color c.
  OrientedEdge parent_of(Color c, EdgeId e) const;

 private:
  std::vector<Color> colors_;
  std::array<DfsNumbering, 2> trees_;
  std::vector<VertexId> child_of_edge_;
};

/// Pluggable strategy for splitting G* into two edge-disjoint spanning trees.
class TwoTreeProvider {
 public:
  virtual ~TwoTreeProvider() = default;
  /// A coloring whose classes are spanning trees, or nullopt when none exists.
  virtual std::optional<std::vector<Color>> partition(const Graph& gstar) const = 0;
};

/// Matroid-union augmenting search: edges are inserted in id order; an edge
/// that closes a cycle in both forests triggers a breadth-first search for a
/// shortest exchange sequence.
class MatroidUnionProvider final : public TwoTreeProvider {
 public:
  std::optional<std::vector<Color>> partition(const Graph& gstar) const override;
};

/// Runs the provider, then normalizes colors so the added copy is black.
/// nullopt means G* is not the union of two spanning trees (G is not Laman).
std::optional<TwoForest> extract_two_trees(const Graph& gstar, const TwoTreeProvider& provider);
std::optional<TwoForest> extract_two_trees(const Graph& gstar);

}  // namespace laman
