#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace laman {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  bool is_added_copy = false;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown by parse_graph; line() is the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Undirected multigraph with stable edge ids. Immutable once built.
///
/// Incidence lists are stored in CSR form; each vertex lists the ids of its
/// incident edges in ascending EdgeId order.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  Graph(VertexId n, std::vector<Edge> edges);

  VertexId vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const {
    auto b = offsets_[static_cast<std::size_t>(v)];
    auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {incidence_.data() + b, static_cast<std::size_t>(e - b)};
  }
  std::size_t degree(VertexId v) const { return incident(v).size(); }

  /// Id of the added copy, or kNoEdge when the graph is not doubled.
  EdgeId added_copy() const { return added_copy_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<EdgeId> incidence_;
  EdgeId added_copy_ = kNoEdge;
};

/// Parses the text graph format: header "n m", then m lines "u v" with 1-based
/// labels. Lines starting with '#' and blank lines are skipped.
Graph parse_graph(std::string_view text);
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Canonical serializer; edges written in stored order, added copies omitted.
std::string serialize_graph(const Graph& g);

/// m == 2n - 3 and n >= 2.
bool count_check(const Graph& g);

/// G* = G plus a parallel copy of e flagged as the added copy. The copy gets id m.
Graph double_edge(const Graph& g, EdgeId e);

}  // namespace laman
